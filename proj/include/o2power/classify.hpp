#pragma once
/// @file classify.hpp
/// Matrix classes over O_2, canonical forms with conjugators, centralizer orders.

#include <optional>
#include <string>
#include <vector>

#include "o2power/counting.hpp"
#include "o2power/hensel.hpp"
#include "o2power/linalg.hpp"

namespace o2power {

enum class MatrixKind { RegularSemisimple, CompatibleCyclic, CyclicNotCompatible, Other };

inline const char* to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::RegularSemisimple: return "RegularSemisimple";
    case MatrixKind::CompatibleCyclic: return "CompatibleCyclic";
    case MatrixKind::CyclicNotCompatible: return "CyclicNotCompatible";
    case MatrixKind::Other: return "Other";
  }
  return "?";
}

struct ClassReport {
  MatrixKind kind;
  PolyO2 charpoly;
  PolyK reduction_charpoly;
  std::optional<FundFactorization> factorization;
  std::optional<BigInt> centralizer_order;
};

/// Centralizer order in GL_n(O_2): prod over (F, r) of |m|^{dr} q^{d(r-1)} (q^d - 1).
inline BigInt centralizer_order(const ClassReport& rep) {
  if (!rep.factorization) fail(ErrorCode::UnsupportedClass, std::string("no centralizer formula for ") + to_string(rep.kind));
  const Ring& R = rep.charpoly.ring();
  BigInt out = 1;
  for (const auto& [F, r] : *rep.factorization) {
    const std::uint64_t d = F.deg();
    out *= big_pow(R.mabs(), d * r) * big_pow(R.q(), d * (r - 1)) * (big_pow(R.q(), d) - 1);
  }
  return out;
}

inline ClassReport classify(const MatO2& A) {
  ClassReport rep{MatrixKind::Other, charpoly(A), PolyK(A.ring().residue_field()), std::nullopt, std::nullopt};
  rep.reduction_charpoly = theta(rep.charpoly);
  if (is_squarefree_k(rep.reduction_charpoly)) {
    rep.kind = MatrixKind::RegularSemisimple;
    rep.factorization = fundamental_factorization(rep.charpoly).factorization();
  } else if (minpoly_k(theta(A)) == rep.reduction_charpoly) {
    const auto split = fundamental_factorization(rep.charpoly);
    if (split.complete()) {
      rep.kind = MatrixKind::CompatibleCyclic;
      rep.factorization = split.factorization();
    } else {
      rep.kind = MatrixKind::CyclicNotCompatible;
    }
  }
  if (rep.factorization && is_gl(A)) rep.centralizer_order = centralizer_order(rep);
  return rep;
}

struct CanonicalForm {
  MatO2 form;
  MatO2 conjugator;  // conjugator^{-1} * A * conjugator == form
};

namespace detail {

/// Conjugator onto diag(J(F_1, r_1), ...). On the component O_2[t]/F^r of the
/// cyclic module the basis is Z^i (t - Z)^b with F(Z) = 0 mod F^r, so t acts by
/// Z^i Y^b -> Z^{i+1} Y^b + Z^i Y^{b+1}, which is the block bidiagonal shape.
inline CanonicalForm canonical_from_factorization(const MatO2& A, const FundFactorization& fac) {
  const Ring& R = A.ring();
  const std::size_t n = A.n();
  const PolyO2 chi = charpoly(A);
  const MatO2 K = krylov_matrix(A, cyclic_vector(A));
  const PolyO2 t = PolyO2::variable(R);
  auto apply = [&](const PolyO2& P) {
    VecO2 v(n, R.zero());
    for (std::size_t j = 0; j < P.coeffs().size(); ++j)
      for (std::size_t i = 0; i < n; ++i) v[i] = R.add(v[i], R.mul(P[j], K(i, j)));
    return v;
  };
  std::vector<VecO2> cols;
  std::vector<MatO2> blocks;
  for (const auto& [F, r] : fac) {
    const PolyO2 G = pow(F, r);
    const PolyO2 H = exact_quotient(chi, G);
    const PolyO2 E = monic_mod(H * inverse_mod_monic(H, G), chi);
    PolyO2 Z = t, Y = PolyO2(R);
    if (r > 1) {
      Z = monic_mod(hensel_root_lift_O2(F, r, hensel_root_lift_k(theta(F), r)), G);
      Y = monic_mod(t - Z, G);
    }
    PolyO2 Yb = PolyO2::constant(R, R.one());
    for (std::size_t b = 0; b < r; ++b) {
      PolyO2 P = Yb;
      for (std::size_t i = 0; i < F.deg(); ++i) {
        cols.push_back(apply(monic_mod(P * E, chi)));
        P = monic_mod(P * Z, G);
      }
      Yb = monic_mod(Yb * Y, G);
    }
    blocks.push_back(jordan_O2(F, r));
  }
  CanonicalForm out{block_diag(R, blocks), MatO2::from_columns(R, cols)};
  if (!is_gl(out.conjugator) || A * out.conjugator != out.conjugator * out.form)
    fail(ErrorCode::Internal, "canonical form conjugation identity failed");
  return out;
}

}  // namespace detail

/// diag(C_{F_1}, ..., C_{F_s}) for regular semisimple A.
inline CanonicalForm canonical_rs(const MatO2& A) {
  const auto rep = classify(A);
  if (rep.kind != MatrixKind::RegularSemisimple) fail(ErrorCode::NotRegularSemisimple, std::string("matrix is ") + to_string(rep.kind));
  return detail::canonical_from_factorization(A, *rep.factorization);
}

/// diag(J(F_1, r_1), ...) for compatible cyclic A. Regular semisimple input is
/// accepted too (all r_i = 1, same result as canonical_rs).
inline CanonicalForm canonical_cc(const MatO2& A) {
  const auto rep = classify(A);
  if (!rep.factorization) fail(ErrorCode::NotCompatibleCyclic, std::string("matrix is ") + to_string(rep.kind));
  return detail::canonical_from_factorization(A, *rep.factorization);
}

}  // namespace o2power
