#pragma once
/// @file counting.hpp
/// Closed-form counts of irreducible, L-power and fundamental irreducible polynomials.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>

#include "o2power/error.hpp"

namespace o2power {

using BigInt = boost::multiprecision::cpp_int;

inline int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

inline BigInt big_pow(std::uint64_t b, std::uint64_t e) { return boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(e)); }

namespace detail {
inline void check_q_d(std::uint64_t q, std::uint64_t d) {
  if (q < 2) fail(ErrorCode::BadParams, "q must be a prime power");
  if (d == 0) fail(ErrorCode::BadParams, "d must be positive");
}
inline std::uint64_t char_of(std::uint64_t q) {
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return p;
  return q;
}
}  // namespace detail

/// Monic irreducibles of degree d over F_q other than t.
inline BigInt count_N(std::uint64_t q, std::uint64_t d) {
  detail::check_q_d(q, d);
  if (d == 1) return BigInt(q - 1);
  BigInt s = 0;
  for (std::uint64_t r = 1; r <= d; ++r) {
    if (d % r) continue;
    const int mu = moebius(r);
    if (mu) s += mu * big_pow(q, d / r);
  }
  return s / d;
}

/// L-power irreducibles of degree d over F_q (t excluded): irreducibles whose
/// root is an L-th power in F_{q^d}^*. Counted by Moebius inversion over the
/// subfields F_{q^e}, e | d, using that the L-th powers form the subgroup of
/// order (q^d-1)/gcd(L, q^d-1) of the cyclic group F_{q^d}^*.
inline BigInt count_N_kL(std::uint64_t q, std::uint64_t d, std::uint64_t L) {
  detail::check_q_d(q, d);
  if (L == 0) fail(ErrorCode::BadParams, "L must be positive");
  if (std::gcd(L, detail::char_of(q)) != 1) fail(ErrorCode::GcdLpViolation, "gcd(L, q) != 1");
  const BigInt Nd = big_pow(q, d) - 1;
  const BigInt powers = Nd / boost::multiprecision::gcd(BigInt(L), Nd);
  BigInt s = 0;
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e) continue;
    const int mu = moebius(d / e);
    if (mu) s += mu * boost::multiprecision::gcd(powers, big_pow(q, e) - 1);
  }
  return s / d;
}

/// The closed form
///   (1/d) * sum_{s|d} mu(s) * gcd(L(q^{d/s}-1), q^d-1) / gcd(L, q^s-1),
/// kept for comparison with count_N_kL. The two agree in many cases (for
/// instance whenever gcd(L, q^d - 1) = 1, and for (3,2,2)) but not always:
/// at (q,d,L) = (3,2,4) this gives 1 while no quadratic over F_3 is a 4-power.
inline BigInt count_N_kL_closed_form(std::uint64_t q, std::uint64_t d, std::uint64_t L) {
  detail::check_q_d(q, d);
  if (L == 0) fail(ErrorCode::BadParams, "L must be positive");
  if (d == 1) return BigInt(q - 1) / std::gcd(L, q - 1);
  const BigInt Nd = big_pow(q, d) - 1;
  BigInt s = 0;
  for (std::uint64_t r = 1; r <= d; ++r) {
    if (d % r) continue;
    const int mu = moebius(r);
    if (!mu) continue;
    const BigInt num = boost::multiprecision::gcd(BigInt(L) * (big_pow(q, d / r) - 1), Nd);
    const BigInt den = boost::multiprecision::gcd(BigInt(L), big_pow(q, r) - 1);
    s += mu * (num / den);
  }
  return s / d;
}

/// L-power monic fundamental irreducibles of degree d over O_2 with |m| = mabs.
inline BigInt count_N_O2L(std::uint64_t q, std::uint64_t mabs, std::uint64_t d, std::uint64_t L) {
  detail::check_q_d(q, d);
  if (d == 1) {
    if (L == 0) fail(ErrorCode::BadParams, "L must be positive");
    if (std::gcd(L, detail::char_of(q)) != 1) fail(ErrorCode::GcdLpViolation, "gcd(L, q) != 1");
    return BigInt(q * mabs - mabs) / std::gcd(L, q - 1);
  }
  return count_N_kL(q, d, L) * big_pow(mabs, d);
}

/// |GL_n(O_2)| = mabs^{n^2} * prod_{i<n} (q^n - q^i); mabs = 1 gives |GL_n(F_q)|.
inline BigInt gl_order(std::uint64_t n, std::uint64_t q, std::uint64_t mabs) {
  if (n == 0) fail(ErrorCode::BadParams, "n must be positive");
  BigInt r = big_pow(mabs, n * n);
  const BigInt qn = big_pow(q, n);
  for (std::uint64_t i = 0; i < n; ++i) r *= qn - big_pow(q, i);
  return r;
}

}  // namespace o2power
