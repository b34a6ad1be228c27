#pragma once
/// @file linalg.hpp
/// Linear algebra over the residue field (solving, minimal polynomials,
/// rational canonical form) and cyclic vectors over O_2.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "o2power/kfactor.hpp"
#include "o2power/matrix.hpp"

namespace o2power {

using VecK = std::vector<KElem>;
using VecO2 = std::vector<O2Elem>;
using RowsK = std::vector<VecK>;  // a rectangular matrix as a list of rows

namespace detail {

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(const Field& k, RowsK& M, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < M.size(); ++c) {
    std::size_t piv = M.size();
    for (std::size_t i = row; i < M.size(); ++i)
      if (!k.is_zero(M[i][c])) {
        piv = i;
        break;
      }
    if (piv == M.size()) continue;
    std::swap(M[row], M[piv]);
    const KElem inv = k.inv(M[row][c]);
    for (auto& x : M[row]) x = k.mul(x, inv);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == row || k.is_zero(M[i][c])) continue;
      const KElem f = M[i][c];
      for (std::size_t j = 0; j < M[i].size(); ++j) M[i][j] = k.sub(M[i][j], k.mul(f, M[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

/// Enumerates k^n in code order: the vector with digits (v_1, ..., v_n) in
/// base q, v_1 least significant, so e_1 comes first.
inline VecK vector_from_code(const Field& k, std::size_t n, std::uint64_t code) {
  VecK v(n);
  for (auto& x : v) {
    x = KElem{static_cast<std::uint32_t>(code % k.q())};
    code /= k.q();
  }
  return v;
}

}  // namespace detail

inline std::size_t rank_k(const Field& k, RowsK M, std::size_t cols) { return detail::rref(k, M, cols).size(); }

/// Some x with M x = b, or nothing if the system is inconsistent.
inline std::optional<VecK> solve_k(const Field& k, const RowsK& M, std::size_t cols, const VecK& b) {
  RowsK aug = M;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto piv = detail::rref(k, aug, cols + 1);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  VecK x(cols, k.zero());
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

/// Basis of {x : M x = 0}.
inline std::vector<VecK> nullspace_k(const Field& k, RowsK M, std::size_t cols) {
  const auto piv = detail::rref(k, M, cols);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<VecK> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    VecK x(cols, k.zero());
    x[f] = k.one();
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = k.neg(M[r][f]);
    basis.push_back(std::move(x));
  }
  return basis;
}

inline RowsK rows_of(const MatK& A) {
  RowsK M(A.n(), VecK(A.n()));
  for (std::size_t i = 0; i < A.n(); ++i)
    for (std::size_t j = 0; j < A.n(); ++j) M[i][j] = A(i, j);
  return M;
}

/// Monic generator of {g : g(A) v = 0}.
inline PolyK local_minpoly_k(const MatK& A, const VecK& v) {
  const Field& k = A.ring();
  const std::size_t n = A.n();
  std::vector<VecK> kry{v};
  for (std::size_t d = 0; d <= n; ++d) {
    // is kry[d] in the span of kry[0..d-1]?
    RowsK M(n, VecK(d));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) M[i][j] = kry[j][i];
    if (auto c = solve_k(k, M, d, kry[d])) {
      std::vector<KElem> coeffs(d + 1);
      for (std::size_t j = 0; j < d; ++j) coeffs[j] = k.neg((*c)[j]);
      coeffs[d] = k.one();
      return PolyK(k, std::move(coeffs));
    }
    kry.push_back(A * kry[d]);
  }
  fail(ErrorCode::Internal, "Krylov sequence did not terminate");
}

namespace detail {
inline PolyK lcm(const PolyK& a, const PolyK& b) { return make_monic(exact_quotient(a * b, gcd(a, b))); }
}  // namespace detail

/// Minimal polynomial over k: lcm of the local minimal polynomials of e_1..e_n.
inline PolyK minpoly_k(const MatK& A) {
  const Field& k = A.ring();
  PolyK m = PolyK::constant(k, k.one());
  for (std::size_t i = 0; i < A.n(); ++i) {
    VecK e(A.n(), k.zero());
    e[i] = k.one();
    m = detail::lcm(m, local_minpoly_k(A, e));
  }
  return m;
}

inline bool is_cyclic_k(const MatK& A) { return minpoly_k(A).deg() == A.n(); }

struct RationalCanonicalForm {
  MatK S;                    // S^{-1} A S = form
  std::vector<PolyK> blocks;  // invariant factors, each dividing the next
  MatK form;
};

/// Rational canonical form with an explicit conjugator. Repeatedly splits off a
/// cyclic subspace generated by a vector of maximal local order together with
/// an invariant complement cut out by a dual functional.
inline RationalCanonicalForm rcf_conjugator_k(const MatK& A) {
  const Field& k = A.ring();
  const std::size_t n = A.n();
  // Current invariant subspace: columns of B (n x dim), with A*B = B*AU.
  std::vector<VecK> B;
  for (std::size_t i = 0; i < n; ++i) {
    VecK e(n, k.zero());
    e[i] = k.one();
    B.push_back(e);
  }
  MatK AU = A;
  std::vector<std::pair<PolyK, std::vector<VecK>>> pieces;
  while (!B.empty()) {
    const std::size_t dim = B.size();
    const PolyK mu = minpoly_k(AU);
    const std::size_t deg = mu.deg();
    VecK x;
    const std::uint64_t total = detail::ipow_sat(k.q(), dim, std::uint64_t(1) << 40);
    for (std::uint64_t code = 1; code < total; ++code) {
      VecK cand = detail::vector_from_code(k, dim, code);
      if (local_minpoly_k(AU, cand).deg() == deg) {
        x = std::move(cand);
        break;
      }
    }
    if (x.empty()) fail(ErrorCode::Internal, "no vector of maximal order found");
    std::vector<VecK> W{x};
    for (std::size_t i = 1; i < deg; ++i) W.push_back(AU * W.back());
    // phi with phi(W_i) = 0 for i < deg-1 and phi(W_{deg-1}) = 1
    RowsK WT(deg, VecK(dim));
    for (std::size_t i = 0; i < deg; ++i) WT[i] = W[i];
    VecK rhs(deg, k.zero());
    rhs[deg - 1] = k.one();
    const auto phi = solve_k(k, WT, dim, rhs);
    if (!phi) fail(ErrorCode::Internal, "dual functional not found");
    // complement = {y : phi(AU^i y) = 0, i < deg}
    RowsK Phi;
    VecK row = *phi;
    const MatK AUt = AU.transpose();
    for (std::size_t i = 0; i < deg; ++i) {
      Phi.push_back(row);
      row = AUt * row;
    }
    const auto N = nullspace_k(k, Phi, dim);
    // record the cyclic piece in global coordinates
    std::vector<VecK> cols;
    for (const auto& w : W) {
      VecK g(n, k.zero());
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < n; ++i) g[i] = k.add(g[i], k.mul(B[j][i], w[j]));
      cols.push_back(std::move(g));
    }
    pieces.emplace_back(mu, std::move(cols));
    // restrict to the complement
    std::vector<VecK> Bn;
    for (const auto& v : N) {
      VecK g(n, k.zero());
      for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t i = 0; i < n; ++i) g[i] = k.add(g[i], k.mul(B[j][i], v[j]));
      Bn.push_back(std::move(g));
    }
    const std::size_t nd = N.size();
    MatK An(k, nd);
    RowsK Nrows(dim, VecK(nd));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < nd; ++j) Nrows[i][j] = N[j][i];
    for (std::size_t j = 0; j < nd; ++j) {
      const auto c = solve_k(k, Nrows, nd, AU * N[j]);
      if (!c) fail(ErrorCode::Internal, "complement is not invariant");
      for (std::size_t i = 0; i < nd; ++i) An.at(i, j) = (*c)[i];
    }
    B = std::move(Bn);
    AU = std::move(An);
  }
  RationalCanonicalForm out{MatK(k, n), {}, MatK(k, n)};
  std::vector<VecK> cols;
  std::vector<MatK> blocks;
  // pieces come out largest first; list them smallest first, keeping the
  // discovery order among equal degrees
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return a.first.deg() < b.first.deg(); });
  for (const auto& [mu, piece] : pieces) {
    out.blocks.push_back(mu);
    blocks.push_back(companion(mu));
    for (const auto& c : piece) cols.push_back(c);
  }
  out.S = MatK::from_columns(k, cols);
  out.form = block_diag(k, blocks);
  if (!is_gl(out.S) || A * out.S != out.S * out.form) fail(ErrorCode::Internal, "rational canonical form check failed");
  return out;
}

/// w over O_2 whose Krylov matrix is invertible: the lift of the first
/// k-cyclic vector of theta(A) in code order.
inline VecO2 cyclic_vector(const MatO2& A) {
  const Ring& R = A.ring();
  const Field& k = R.residue_field();
  const MatK Ab = theta(A);
  if (!is_cyclic_k(Ab)) fail(ErrorCode::NotCyclic, "reduction is not cyclic");
  const std::size_t n = A.n();
  const std::uint64_t total = detail::ipow_sat(k.q(), n, std::uint64_t(1) << 40);
  for (std::uint64_t code = 1; code < total; ++code) {
    const VecK v = detail::vector_from_code(k, n, code);
    if (!is_gl(krylov_matrix(Ab, v))) continue;
    VecO2 w;
    for (auto x : v) w.push_back(R.lift(x));
    if (!is_gl(krylov_matrix(A, w))) fail(ErrorCode::Internal, "lifted cyclic vector is not cyclic");
    return w;
  }
  fail(ErrorCode::Internal, "no cyclic vector found for a cyclic matrix");
}

}  // namespace o2power
