#pragma once
/// @file series.hpp
/// Truncated product expansions of the class-count and probability generating
/// functions, in exact rational arithmetic.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "o2power/counting.hpp"

namespace o2power {

using BigRational = boost::multiprecision::cpp_rational;

enum class SeriesFamily { s, sL, r, rL, cs, csL, cr, crL };

inline const char* to_string(SeriesFamily f) {
  switch (f) {
    case SeriesFamily::s: return "s";
    case SeriesFamily::sL: return "sL";
    case SeriesFamily::r: return "r";
    case SeriesFamily::rL: return "rL";
    case SeriesFamily::cs: return "cs";
    case SeriesFamily::csL: return "csL";
    case SeriesFamily::cr: return "cr";
    case SeriesFamily::crL: return "crL";
  }
  return "?";
}

inline SeriesFamily parse_family(std::string_view s) {
  for (auto f : {SeriesFamily::s, SeriesFamily::sL, SeriesFamily::r, SeriesFamily::rL, SeriesFamily::cs,
                 SeriesFamily::csL, SeriesFamily::cr, SeriesFamily::crL})
    if (s == to_string(f)) return f;
  fail(ErrorCode::ParseError, "unknown series family '" + std::string(s) + "'");
}

inline bool has_L(SeriesFamily f) {
  return f == SeriesFamily::sL || f == SeriesFamily::rL || f == SeriesFamily::csL || f == SeriesFamily::crL;
}
inline bool is_class_count(SeriesFamily f) {
  return f == SeriesFamily::cs || f == SeriesFamily::csL || f == SeriesFamily::cr || f == SeriesFamily::crL;
}

struct Series {
  std::vector<BigRational> coefficients;  // index 0..N
  SeriesFamily family;
  std::uint64_t q, mabs;
  std::optional<std::uint64_t> L;
};

namespace detail {

using RSeries = std::vector<BigRational>;

inline RSeries mul_trunc(const RSeries& a, const RSeries& b, std::size_t N) {
  RSeries c(N + 1, BigRational(0));
  for (std::size_t i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= N; ++j)
      if (b[j] != 0) c[i + j] += a[i] * b[j];
  }
  return c;
}

/// (1 + x)^E truncated at degree N, x(0) = 0, E any integer: sum_k binom(E, k) x^k.
inline RSeries binomial_pow(const RSeries& x, const BigInt& E, std::size_t N) {
  RSeries out(N + 1, BigRational(0));
  out[0] = 1;
  RSeries xk = out;  // x^k
  BigRational c = 1;  // binom(E, k)
  for (std::size_t k = 1; k <= N; ++k) {
    xk = mul_trunc(xk, x, N);
    c = c * BigRational(E - (k - 1)) / BigRational(k);
    bool any = false;
    for (std::size_t i = 0; i <= N; ++i)
      if (xk[i] != 0) {
        out[i] += c * xk[i];
        any = true;
      }
    if (!any) break;
  }
  return out;
}

inline std::uint64_t check_prime_power_odd(std::uint64_t q) {
  if (q < 3 || q % 2 == 0) fail(ErrorCode::BadParams, "q must be an odd prime power");
  const std::uint64_t p = char_of(q);
  std::uint64_t x = q;
  while (x % p == 0) x /= p;
  if (x != 1) fail(ErrorCode::BadParams, "q must be an odd prime power");
  return p;
}

}  // namespace detail

/// Coefficients 0..N of the product over d <= N of base_d(z)^{exponent_d}:
///   s/sL:   base 1 + z^d / (|m|^d (q^d-1))
///   r/rL:   base 1 + sum_{s>=1} z^{ds} / (|m|^{ds} q^{(s-1)d} (q^d-1))
///   cs/csL: base 1 + z^d
///   cr/crL: base 1 - z^d, exponent negated
/// with exponent |m|^d N(q,d), or N_{O_2,L}(q,d) for the L families.
inline Series series(SeriesFamily family, std::uint64_t q, std::uint64_t mabs, std::optional<std::uint64_t> L,
                     std::size_t N) {
  const std::uint64_t p = detail::check_prime_power_odd(q);
  if (mabs != q) fail(ErrorCode::BadParams, "|m| must equal q");
  if (N > 64) fail(ErrorCode::BadParams, "N must be at most 64");
  if (has_L(family)) {
    if (!L || *L == 0) fail(ErrorCode::BadParams, "family " + std::string(to_string(family)) + " needs L >= 1");
    if (std::gcd(*L, p) != 1) fail(ErrorCode::BadParams, "gcd(L, p) must be 1");
  } else {
    L.reset();
  }
  detail::RSeries prod(N + 1, BigRational(0));
  prod[0] = 1;
  for (std::size_t d = 1; d <= N; ++d) {
    BigInt E = L ? count_N_O2L(q, mabs, d, *L) : big_pow(mabs, d) * count_N(q, d);
    if (E == 0) continue;
    detail::RSeries x(N + 1, BigRational(0));
    const BigInt qd1 = big_pow(q, d) - 1;
    switch (family) {
      case SeriesFamily::s:
      case SeriesFamily::sL: x[d] = BigRational(1) / BigRational(big_pow(mabs, d) * qd1); break;
      case SeriesFamily::r:
      case SeriesFamily::rL:
        for (std::size_t s = 1; d * s <= N; ++s)
          x[d * s] = BigRational(1) / BigRational(big_pow(mabs, d * s) * big_pow(q, (s - 1) * d) * qd1);
        break;
      case SeriesFamily::cs:
      case SeriesFamily::csL: x[d] = 1; break;
      case SeriesFamily::cr:
      case SeriesFamily::crL:
        x[d] = -1;
        E = -E;
        break;
    }
    prod = detail::mul_trunc(prod, detail::binomial_pow(x, E, N), N);
  }
  return Series{std::move(prod), family, q, mabs, L};
}

/// Class-count families only; the coefficients are integers.
inline std::vector<BigInt> class_counts(SeriesFamily family, std::uint64_t q, std::uint64_t mabs,
                                        std::optional<std::uint64_t> L, std::size_t N) {
  if (!is_class_count(family)) fail(ErrorCode::BadParams, "not a class-count family");
  const Series s = series(family, q, mabs, L, N);
  std::vector<BigInt> out;
  for (const auto& c : s.coefficients) {
    if (denominator(c) != 1) fail(ErrorCode::Internal, "class count is not an integer");
    out.push_back(numerator(c));
  }
  return out;
}

}  // namespace o2power
