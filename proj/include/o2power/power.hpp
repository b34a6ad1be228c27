#pragma once
/// @file power.hpp
/// L-th power decisions and explicit L-th roots for regular semisimple and
/// compatible cyclic matrices over O_2.

#include <optional>
#include <string>
#include <vector>

#include "o2power/classify.hpp"

namespace o2power {

/// B with theta(B) = Btilde and F(B) = A, for A regular semisimple.
inline MatO2 matrix_hensel_solve(const PolyO2& F, const MatO2& A, const MatK& Btilde) {
  const Ring& R = A.ring();
  const Field& k = R.residue_field();
  const std::size_t n = A.n();
  if (Btilde.n() != n) fail(ErrorCode::DimMismatch, "Btilde has the wrong size");
  if (classify(A).kind != MatrixKind::RegularSemisimple)
    fail(ErrorCode::PreconditionViolated, "A must be regular semisimple");
  const MatK Ab = theta(A);
  if (evaluate(theta(F), Btilde) != Ab) fail(ErrorCode::PreconditionViolated, "theta(F)(Btilde) != theta(A)");
  const MatK dF = evaluate(derivative(theta(F)), Btilde);
  if (!is_gl(dF)) fail(ErrorCode::PreconditionViolated, "F'(Btilde) is not invertible");

  // Btilde = sum a_i Abar^i
  std::vector<MatK> powers{MatK::identity(k, n)};
  for (std::size_t i = 1; i < n; ++i) powers.push_back(powers.back() * Ab);
  RowsK M(n * n, VecK(n));
  VecK rhs(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < n; ++i) M[r * n + c][i] = powers[i](r, c);
      rhs[r * n + c] = Btilde(r, c);
    }
  const auto a = solve_k(k, M, n, rhs);
  if (!a) fail(ErrorCode::PreconditionViolated, "Btilde is not a polynomial in theta(A)");

  MatO2 B0(R, n), Ai = MatO2::identity(R, n);
  for (std::size_t i = 0; i < n; ++i) {
    B0 = B0 + Ai.scaled(R.lift((*a)[i]));
    Ai = Ai * A;
  }
  const MatK C = m_part(evaluate(F, B0) - A);
  const MatK D = -(C * inverse(dF));
  const MatO2 B = B0 + pi_times(R, D);
  if (evaluate(F, B) != A) fail(ErrorCode::Internal, "matrix Hensel correction failed");
  return B;
}

/// Some Btilde with Btilde^L = Abar, for Abar regular semisimple over k; empty
/// iff some irreducible factor of the characteristic polynomial fails the
/// L-power test. Uses diag(C_v) with v the first degree-d factor of f(t^L)
/// for each factor f, moved onto Abar through rational canonical forms.
inline std::optional<MatK> field_root(const MatK& Abar, std::uint64_t L) {
  const Field& k = Abar.ring();
  if (L == 0) fail(ErrorCode::BadParams, "L must be positive");
  const PolyK chi = charpoly(Abar);
  if (!is_squarefree_k(chi)) fail(ErrorCode::NotRegularSemisimple, "reduction is not regular semisimple");
  if (L == 1) return Abar;
  std::vector<MatK> blocks;
  for (const auto& fac : k_factor(chi)) {
    const auto vs = l_power_factors_k(fac.f, L);
    if (vs.empty()) return std::nullopt;
    blocks.push_back(companion(vs.front()));
  }
  const MatK D = block_diag(k, blocks);
  const auto S1 = rcf_conjugator_k(D.pow(L));
  const auto S2 = rcf_conjugator_k(Abar);
  if (S1.form != S2.form) fail(ErrorCode::Internal, "D^L and Abar have different rational forms");
  const MatK T = S2.S * inverse(S1.S);
  const MatK B = T * D * inverse(T);
  if (B.pow(L) != Abar) fail(ErrorCode::Internal, "field root check failed");
  return B;
}

struct FactorPowerFlag {
  PolyO2 F;
  std::size_t r;
  bool is_L_power;
};

struct PowerDecision {
  bool is_power = false;
  std::vector<FactorPowerFlag> per_factor;
  std::optional<MatO2> witness;
};

namespace detail {

inline ClassReport power_preconditions(const MatO2& A, std::uint64_t L) {
  if (!is_gl(A)) fail(ErrorCode::PreconditionViolated, "A is not invertible");
  require_gcd_Lp(L, A.ring().p());
  auto rep = classify(A);
  if (!rep.factorization)
    fail(ErrorCode::UnsupportedClass, std::string("no power criterion for class ") + to_string(rep.kind));
  return rep;
}

/// L-th root of a regular semisimple A, block by block on its canonical form.
inline std::optional<MatO2> rs_root(const MatO2& A, std::uint64_t L) {
  const Ring& R = A.ring();
  const CanonicalForm cf = canonical_rs(A);
  const PolyO2 tL = PolyO2::monomial(R, R.one(), L);
  std::vector<MatO2> roots;
  for (const auto& [F, r] : fundamental_factorization(charpoly(A)).factorization()) {
    const MatO2 C = companion(F);
    const auto bt = field_root(theta(C), L);
    if (!bt) return std::nullopt;
    roots.push_back(matrix_hensel_solve(tL, C, *bt));
  }
  const MatO2 B = cf.conjugator * block_diag(R, roots) * inverse(cf.conjugator);
  if (B.pow(L) != A) fail(ErrorCode::Internal, "regular semisimple root check failed");
  return B;
}

}  // namespace detail

/// B in GL_n(O_2) with B^L = A. Regular semisimple A is handled block by block
/// on its canonical form. For compatible cyclic A, each companion C_F gets a
/// root D, B = diag(bidiag(D, r)) has B^L similar to A, and the two canonical
/// conjugators carry B over.
inline MatO2 lth_root(const MatO2& A, std::uint64_t L) {
  const Ring& R = A.ring();
  const auto rep = detail::power_preconditions(A, L);
  if (rep.kind == MatrixKind::RegularSemisimple) {
    auto B = detail::rs_root(A, L);
    if (!B) fail(ErrorCode::NotAPower, "some factor is not an L-power polynomial");
    return *B;
  }
  std::vector<MatO2> blocks;
  for (const auto& [F, r] : *rep.factorization) {
    const auto D = detail::rs_root(companion(F), L);
    if (!D) fail(ErrorCode::NotAPower, "factor " + F.pretty() + " is not an L-power polynomial");
    blocks.push_back(block_bidiagonal(*D, r));
  }
  const MatO2 B = block_diag(R, blocks);
  const CanonicalForm ca = canonical_cc(A);
  const CanonicalForm cb = canonical_cc(B.pow(L));
  if (ca.form != cb.form) fail(ErrorCode::Internal, "B^L is not similar to A");
  const MatO2 T = ca.conjugator * inverse(cb.conjugator);
  const MatO2 W = T * B * inverse(T);
  if (W.pow(L) != A) fail(ErrorCode::Internal, "compatible cyclic root check failed");
  return W;
}

inline PowerDecision is_lth_power(const MatO2& A, std::uint64_t L, bool want_witness = false) {
  const auto rep = detail::power_preconditions(A, L);
  PowerDecision out;
  out.is_power = true;
  for (const auto& [F, r] : *rep.factorization) {
    const bool ok = is_L_power_poly(F, L);
    out.per_factor.push_back({F, r, ok});
    out.is_power = out.is_power && ok;
  }
  if (want_witness && out.is_power) out.witness = lth_root(A, L);
  return out;
}

}  // namespace o2power
