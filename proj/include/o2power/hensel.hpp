#pragma once
/// @file hensel.hpp
/// Factorization over O_2 by Hensel lifting, r-th root certificates for
/// primary components, root lifting, and L-power polynomial tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "o2power/kfactor.hpp"

namespace o2power {

inline bool is_fundamental_irreducible(const PolyO2& F) {
  if (F.is_zero()) return false;
  const PolyK f = theta(F);
  return !f.is_zero() && f.deg() >= 1 && is_irreducible_k(f);
}

struct HenselSplit {
  PolyO2 g1;  // monic, theta(g1) = g1 of the input
  PolyO2 g2;
};

/// Unique F = G1*G2 over O_2 with theta(G1) = g1 (monic), theta(G2) = g2.
/// One linear correction is exact because pi^2 = 0.
inline HenselSplit hensel_split(const PolyO2& F, const PolyK& g1, const PolyK& g2) {
  const Ring& R = F.ring();
  require_same_ring(R.residue_field(), g1.ring());
  if (!g1.is_monic()) fail(ErrorCode::NonMonic, "first factor must be monic");
  if (theta(F) != g1 * g2) fail(ErrorCode::ReductionMismatch, "theta(F) != g1*g2");
  const ExtGcdK e = ext_gcd(g1, g2);
  if (!e.g.is_one()) fail(ErrorCode::NotCoprime, "reduced factors are not coprime");
  const PolyO2 G10 = lift(R, g1), G20 = lift(R, g2);
  const PolyK delta = m_part(F - G10 * G20);
  // delta = a*g2 + b*g1 with deg a < deg g1
  const PolyK a = mod(delta * e.t, g1);
  const PolyK b = exact_quotient(delta - a * g2, g1);
  HenselSplit out{G10 + pi_times(R, a), G20 + pi_times(R, b)};
  if (out.g1 * out.g2 != F) fail(ErrorCode::Internal, "Hensel split failed to reproduce F");
  return out;
}

struct BezoutO2 {
  PolyO2 a, b;  // a*F + b*G = 1
};

/// Bezout witnesses over O_2 for polynomials with coprime reductions: lift
/// the field identity s*f + t*g = 1 + M (M in m[t]) and multiply by 1 - M.
inline BezoutO2 bezout_O2(const PolyO2& F, const PolyO2& G) {
  const Ring& R = F.ring();
  require_same_ring(R, G.ring());
  const ExtGcdK e = ext_gcd(theta(F), theta(G));
  if (!e.g.is_one()) fail(ErrorCode::NotCoprime, "reductions are not coprime");
  const PolyO2 S = lift(R, e.s), T = lift(R, e.t);
  const PolyO2 one = PolyO2::constant(R, R.one());
  const PolyO2 corr = one - (S * F + T * G - one);
  BezoutO2 out{corr * S, corr * T};
  if (out.a * F + out.b * G != one) fail(ErrorCode::Internal, "Bezout correction failed");
  return out;
}

/// H^{-1} mod G over O_2, G monic with theta(H), theta(G) coprime.
inline PolyO2 inverse_mod_monic(const PolyO2& H, const PolyO2& G) {
  if (!G.is_monic()) fail(ErrorCode::NonMonicDivisor, "modulus must be monic");
  const BezoutO2 w = bezout_O2(monic_mod(H, G), G);
  return monic_mod(w.a, G);
}

/// Returns the monic fundamental irreducible F with F^r = G, if any.
inline std::optional<PolyO2> is_rth_power_of_fundamental(const PolyO2& G, const PolyK& f, std::size_t r) {
  const Ring& R = G.ring();
  if (!G.is_monic()) fail(ErrorCode::NonMonic, "component must be monic");
  if (r == 0) fail(ErrorCode::BadParams, "r must be positive");
  if (!f.is_monic() || !is_irreducible_k(f)) fail(ErrorCode::NotIrreducible, "f must be monic irreducible");
  if (theta(G) != pow(f, r)) fail(ErrorCode::ReductionMismatch, "theta(G) != f^r");
  const PolyO2 F0 = lift(R, f);
  const PolyK delta = m_part(G - pow(F0, r));
  std::optional<PolyO2> F;
  if (r % R.p() == 0) {
    // (F0 + pi*E)^r = F0^r for every E, so only the exact power qualifies.
    if (delta.is_zero()) F = F0;
  } else {
    const Field& k = R.residue_field();
    const PolyK D = pow(f, r - 1).scaled(k.from_int(static_cast<std::int64_t>(r)));
    auto [e, rem] = divmod(delta, D);
    if (rem.is_zero()) F = F0 + pi_times(R, e);
  }
  if (F && pow(*F, r) != G) fail(ErrorCode::Internal, "r-th root certificate failed");
  return F;
}

struct FundFactor {
  PolyO2 F;
  std::size_t r;
  friend bool operator==(const FundFactor&, const FundFactor&) = default;
};
using FundFactorization = std::vector<FundFactor>;

/// A Hensel component G with theta(G) = f^r and, when one exists, the
/// certified fundamental irreducible F with F^r = G.
struct PrimaryComponent {
  PolyO2 component;
  PolyK f;
  std::size_t r;
  std::optional<PolyO2> F;
  bool certified() const { return F.has_value(); }
};

struct FundamentalSplit {
  std::vector<PrimaryComponent> components;

  bool complete() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.certified(); });
  }
  bool separable() const {
    return std::all_of(components.begin(), components.end(), [](const auto& c) { return c.r == 1; });
  }
  FundFactorization factorization() const {
    FundFactorization out;
    for (const auto& c : components) {
      if (!c.F) fail(ErrorCode::NotCompatibleCyclic, "component " + c.component.pretty() + " is not a primary power");
      out.push_back({*c.F, c.r});
    }
    return out;
  }
};

namespace detail {
inline bool component_less(const PrimaryComponent& a, const PrimaryComponent& b) {
  if (a.f.deg() != b.f.deg()) return a.f.deg() < b.f.deg();
  if (a.r != b.r) return a.r < b.r;
  const PolyO2& x = a.F ? *a.F : a.component;
  const PolyO2& y = b.F ? *b.F : b.component;
  return canonical_less(x, y);
}
}  // namespace detail

/// Splits a monic F along the coprime primary parts of theta(F), peeling
/// them off in `split_order` (indices into the sorted k-factorization), then
/// certifies each component as an r-th power of a fundamental irreducible.
inline FundamentalSplit fundamental_factorization(const PolyO2& F, std::vector<std::size_t> split_order = {}) {
  if (!F.is_monic()) fail(ErrorCode::NonMonic, "fundamental factorization needs a monic polynomial");
  const Ring& R = F.ring();
  FundamentalSplit out;
  if (F.deg() == 0) return out;
  const auto facs = k_factor(theta(F));
  if (split_order.empty()) {
    split_order.resize(facs.size());
    std::iota(split_order.begin(), split_order.end(), 0);
  }
  if (split_order.size() != facs.size()) fail(ErrorCode::BadParams, "split order has the wrong length");
  PolyO2 rest = F;
  for (std::size_t idx = 0; idx < split_order.size(); ++idx) {
    const KFactor& fac = facs.at(split_order[idx]);
    const PolyK primary = pow(fac.f, fac.mult);
    PolyO2 G = rest;
    if (idx + 1 < split_order.size()) {
      auto parts = hensel_split(rest, primary, exact_quotient(theta(rest), primary));
      G = std::move(parts.g1);
      rest = std::move(parts.g2);
    }
    PrimaryComponent c{G, fac.f, fac.mult, std::nullopt};
    c.F = fac.mult == 1 ? std::optional<PolyO2>(G) : is_rth_power_of_fundamental(G, fac.f, fac.mult);
    out.components.push_back(std::move(c));
  }
  std::sort(out.components.begin(), out.components.end(), detail::component_less);
  (void)R;
  return out;
}

// ------------------------------------------------------------ root lifting

/// z with z = t mod h and h(z) = 0 mod h^n, reduced modulo h^n (Newton iteration).
inline PolyK hensel_root_lift_k(const PolyK& h_in, std::size_t n) {
  if (n == 0) fail(ErrorCode::BadParams, "n must be at least 1");
  if (h_in.is_zero() || !is_irreducible_k(h_in)) fail(ErrorCode::NotIrreducible, "h must be irreducible");
  const PolyK h = make_monic(h_in);
  const Field& k = h.ring();
  const PolyK H = pow(h, n);
  const PolyK dh = derivative(h);
  PolyK z = mod(PolyK::variable(k), H);
  for (std::size_t it = 0; it <= n + 1; ++it) {
    const PolyK hz = compose_mod(h, z, H);
    if (hz.is_zero()) return z;
    const PolyK inv = inverse_mod(compose_mod(dh, z, H), H);
    z = mod(z - mulmod(hz, inv, H), H);
  }
  fail(ErrorCode::Internal, "Newton iteration did not converge");
}

/// Lift Z of z with Z = t mod F and F(Z) = 0 mod F^r, built one power of F
/// at a time: solve for W0, shift by F^{j-1}*W0, then subtract F^j*lift(w)
/// so that the reduction is z again.
inline PolyO2 hensel_root_lift_O2(const PolyO2& F, std::size_t r, const PolyK& z) {
  const Ring& R = F.ring();
  if (r == 0) fail(ErrorCode::PreconditionViolated, "r must be at least 1");
  if (!F.is_monic() || !is_fundamental_irreducible(F))
    fail(ErrorCode::PreconditionViolated, "F must be monic fundamental irreducible");
  const PolyK f = theta(F);
  const PolyK t = PolyK::variable(R.residue_field());
  if (!mod(z - t, f).is_zero()) fail(ErrorCode::PreconditionViolated, "z is not congruent to t modulo theta(F)");
  if (!mod(compose(f, z), pow(f, r)).is_zero())
    fail(ErrorCode::PreconditionViolated, "theta(F)(z) is not divisible by theta(F)^r");

  const PolyO2 T = PolyO2::variable(R);
  PolyO2 Z = T + F * lift(R, exact_quotient(z - t, f));
  if (r > 1) {
    const PolyO2 dinv = inverse_mod_monic(derivative(F), F);
    for (std::size_t j = 2; j <= r; ++j) {
      const PolyO2 Fj1 = pow(F, j - 1);
      const PolyO2 G = exact_quotient(compose(F, Z), Fj1);
      PolyO2 dinv_at = PolyO2(R);
      for (std::size_t i = dinv.coeffs().size(); i-- > 0;)
        dinv_at = monic_mod(dinv_at * Z + PolyO2::constant(R, dinv.coeffs()[i]), F);
      const PolyO2 W0 = monic_mod(-(G * dinv_at), F);
      const PolyO2 V = Z + Fj1 * W0;
      const PolyK w = exact_quotient(theta(V) - z, pow(f, j));
      Z = V - pow(F, j) * lift(R, w);
    }
  }
  if (theta(Z) != z || !monic_mod(Z - T, F).is_zero() || !monic_mod(compose(F, Z), pow(F, r)).is_zero())
    fail(ErrorCode::Internal, "root lift postconditions failed");
  return Z;
}

// ------------------------------------------------------- L-power polynomials

namespace detail {

inline void require_gcd_Lp(std::uint64_t L, std::uint32_t p) {
  if (L == 0) fail(ErrorCode::BadParams, "L must be positive");
  if (std::gcd<std::uint64_t, std::uint64_t>(L, p) != 1)
    fail(ErrorCode::GcdLpViolation, "gcd(L, p) != 1 for L = " + std::to_string(L) + ", p = " + std::to_string(p));
}

inline std::uint64_t field_order_minus_one(const Field& k, std::size_t d) {
  const std::uint64_t cap = std::uint64_t(1) << 62;
  const std::uint64_t qd = ipow_sat(k.q(), d, cap);
  if (qd > cap) fail(ErrorCode::BadParams, "extension of degree " + std::to_string(d) + " is too large");
  return qd - 1;
}

}  // namespace detail

/// True iff f(t^L) has an irreducible factor of degree d = deg f. For f != t
/// this holds iff the root of f is an L-th power in F_{q^d}, i.e. iff
/// t^((q^d-1)/gcd(L, q^d-1)) = 1 in k[t]/(f).
inline bool k_L_power_test(const PolyK& f, std::uint64_t L) {
  if (L == 0) fail(ErrorCode::BadParams, "L must be positive");
  if (f.is_zero() || !f.is_monic() || !is_irreducible_k(f))
    fail(ErrorCode::NotIrreducible, "f must be monic irreducible");
  const Field& k = f.ring();
  if (f == PolyK::variable(k)) return true;
  const std::uint64_t N = detail::field_order_minus_one(k, f.deg());
  const std::uint64_t g = std::gcd(L, N);
  return powmod(PolyK::variable(k), N / g, f).is_one();
}

/// All irreducible factors of degree d = deg f of f(t^L), canonical order.
/// Roots live in F_{q^d}^*, so L may be reduced modulo q^d - 1 first.
inline std::vector<PolyK> l_power_factors_k(const PolyK& f, std::uint64_t L) {
  if (L == 0) fail(ErrorCode::BadParams, "L must be positive");
  if (f.is_zero() || !f.is_monic() || !is_irreducible_k(f))
    fail(ErrorCode::NotIrreducible, "f must be monic irreducible");
  const Field& k = f.ring();
  if (f == PolyK::variable(k)) return {f};
  const std::size_t d = f.deg();
  const std::uint64_t N = detail::field_order_minus_one(k, d);
  std::uint64_t Lr = L % N;
  if (Lr == 0) Lr = N;
  if (d * Lr > 200000) fail(ErrorCode::BadParams, "f(t^L) too large to factor");
  const PolyK P = substitute_power(f, Lr);
  PolyK X = PolyK::variable(k);
  for (std::size_t i = 0; i < d; ++i) X = powmod(X, k.q(), P);
  const PolyK h = gcd(X - PolyK::variable(k), P);
  std::vector<PolyK> out;
  if (h.deg() == 0) return out;
  for (auto& fac : k_factor(h)) {
    if (fac.f.deg() != d) fail(ErrorCode::Internal, "unexpected factor degree in f(t^L)");
    out.push_back(fac.f);
  }
  return out;
}

/// Degree-d monic fundamental irreducible factors of F(t^L), lifted from
/// l_power_factors_k by Hensel splitting; canonical order of the reductions.
inline std::vector<PolyO2> l_power_factors(const PolyO2& F, std::uint64_t L) {
  const Ring& R = F.ring();
  if (!F.is_monic() || !is_fundamental_irreducible(F))
    fail(ErrorCode::NotFundamentalIrreducible, "F must be monic fundamental irreducible");
  detail::require_gcd_Lp(L, R.p());
  const PolyK f = theta(F);
  const std::size_t d = f.deg();
  if (f == PolyK::variable(R.residue_field())) {
    if (L == 1 || F == PolyO2::variable(R)) return {F};
    return {};
  }
  if (d * L > 200000) fail(ErrorCode::BadParams, "F(t^L) too large to split");
  const PolyO2 FL = substitute_power(F, L);
  const PolyK fL = theta(FL);
  std::vector<PolyO2> out;
  for (const auto& v : l_power_factors_k(f, L)) out.push_back(hensel_split(FL, v, exact_quotient(fL, v)).g1);
  return out;
}

/// True iff F(t^L) has a monic fundamental irreducible factor of degree deg F.
/// Decided on the residue field; for small d*L the first factor is also lifted
/// and checked as a divisor of F(t^L).
inline bool is_L_power_poly(const PolyO2& F, std::uint64_t L) {
  const Ring& R = F.ring();
  if (!F.is_monic() || !is_fundamental_irreducible(F))
    fail(ErrorCode::NotFundamentalIrreducible, "F must be monic fundamental irreducible");
  detail::require_gcd_Lp(L, R.p());
  const PolyK f = theta(F);
  if (f == PolyK::variable(R.residue_field())) return L == 1 || F == PolyO2::variable(R);
  const bool ok = k_L_power_test(f, L);
  if (ok && f.deg() * L <= 512) {
    const auto lifted = l_power_factors(F, L);
    if (lifted.empty() || !monic_mod(substitute_power(F, L), lifted.front()).is_zero())
      fail(ErrorCode::Internal, "lifted L-power factor does not divide F(t^L)");
  }
  return ok;
}

}  // namespace o2power
