#pragma once
/// @file ring.hpp
/// Residue fields F_q and the length-two rings Z/p^2 and F_q[u]/(u^2).
///
/// Elements are stored as small integer codes. A residue-field element is the
/// integer whose base-p digits are its coefficients over F_p. A ring element is
/// a0 + q*a1 where a0, a1 are residue-field codes; for Z/p^2 this is the usual
/// integer in [0, p^2), for F_q[u]/(u^2) it is the pair a0 + u*a1. In both
/// cases theta(x) = x mod q and x = lift(theta(x)) + pi*lift(x div q).

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "o2power/error.hpp"

namespace o2power {

struct KElem {
  std::uint32_t v = 0;
  auto operator<=>(const KElem&) const = default;
};

struct O2Elem {
  std::uint32_t v = 0;
  auto operator<=>(const O2Elem&) const = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

// Dense polynomials over F_p, little-endian; only used to validate and pick
// the modulus of F_q before the generic machinery exists.
using FpPoly = std::vector<std::uint64_t>;

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
  fp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t inv_lc = powmod_u64(m.back(), p - 2, p);
  while (a.size() > dm) {
    const std::uint64_t c = a.back() * inv_lc % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    fp_trim(a);
  }
  return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m,
                        std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(r), m, p);
}

inline FpPoly fp_powmod(FpPoly b, std::uint64_t e, const FpPoly& m, std::uint64_t p) {
  FpPoly r{1};
  b = fp_mod(std::move(b), m, p);
  while (e) {
    if (e & 1) r = fp_mulmod(r, b, m, p);
    b = fp_mulmod(b, b, m, p);
    e >>= 1;
  }
  return r;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    a = fp_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Inverse of a modulo the irreducible g by the extended Euclidean algorithm.
inline FpPoly fp_inverse_mod(FpPoly a, const FpPoly& g, std::uint64_t p) {
  auto sub_mul = [&](const FpPoly& x, const FpPoly& y, const FpPoly& qt) {
    FpPoly prod(y.size() + qt.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = 0; j < qt.size(); ++j) prod[i + j] = (prod[i + j] + y[i] * qt[j]) % p;
    FpPoly r(std::max(x.size(), prod.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
      const std::uint64_t xi = i < x.size() ? x[i] : 0, pi = i < prod.size() ? prod[i] : 0;
      r[i] = (xi + p - pi) % p;
    }
    fp_trim(r);
    return r;
  };
  FpPoly r0 = g, r1 = fp_mod(std::move(a), g, p), s0{}, s1{1};
  while (!r1.empty()) {
    // long division r0 = qt * r1 + rem
    FpPoly rem = r0, qt(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    const std::uint64_t inv_lc = powmod_u64(r1.back(), p - 2, p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      const std::uint64_t c = rem.back() * inv_lc % p;
      const std::size_t shift = rem.size() - r1.size();
      qt[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = (rem[shift + i] + (p - c) * r1[i]) % p;
      fp_trim(rem);
    }
    fp_trim(qt);
    FpPoly s2 = sub_mul(s0, s1, qt);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant
  const std::uint64_t c = powmod_u64(r0[0], p - 2, p);
  for (auto& x : s0) x = x * c % p;
  return fp_mod(std::move(s0), g, p);
}

// Rabin's test for a monic g of degree m over F_p.
inline bool fp_is_irreducible(const FpPoly& g, std::uint64_t p) {
  const std::size_t m = g.size() - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  auto x_pow_p_pow = [&](std::size_t k) {
    FpPoly x{0, 1};
    for (std::size_t i = 0; i < k; ++i) x = fp_powmod(x, p, g, p);
    return x;
  };
  FpPoly top = x_pow_p_pow(m);
  FpPoly x = fp_mod(FpPoly{0, 1}, g, p);
  if (top != x) return false;
  for (std::size_t r = 2; r <= m; ++r) {
    if (m % r != 0 || !is_prime(r)) continue;
    FpPoly h = x_pow_p_pow(m / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    if (fp_gcd(h, g, p).size() != 1) return false;
  }
  return true;
}

inline std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    fail(ErrorCode::ParseError, "not an integer: '" + std::string(s) + "'");
  return v;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

/// The residue field F_q = F_p[x]/(g).
class Field {
 public:
  using elem = KElem;

  explicit Field(std::uint32_t p) : Field(p, 1, {0, 1}) {}

  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus) {
    if (p == 2) fail(ErrorCode::BadParams, "characteristic 2 is not supported");
    if (!detail::is_prime(p)) fail(ErrorCode::BadParams, std::to_string(p) + " is not prime");
    if (m == 0) fail(ErrorCode::BadParams, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      q *= p;
      if (q > 65535) fail(ErrorCode::BadParams, "residue field too large (q must be < 65536)");
    }
    if (m > 1 && q > 1024)
      fail(ErrorCode::BadParams, "extension fields are limited to q <= 1024 (table arithmetic)");
    if (modulus.size() != m + 1 || modulus.back() != 1)
      fail(ErrorCode::BadParams, "modulus must be monic of degree m");
    detail::FpPoly g(modulus.begin(), modulus.end());
    for (auto& c : g) c %= p;
    if (m > 1 && !detail::fp_is_irreducible(g, p))
      fail(ErrorCode::BadParams, "modulus is not irreducible over F_p");
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<std::uint32_t>(q);
    for (auto& c : modulus) c %= p;
    impl->modulus = std::move(modulus);
    if (m > 1) build_tables(*impl);
    impl_ = std::move(impl);
  }

  std::uint32_t p() const { return impl_->p; }
  std::uint32_t m() const { return impl_->m; }
  std::uint32_t q() const { return impl_->q; }
  const std::vector<std::uint32_t>& modulus() const { return impl_->modulus; }

  KElem zero() const { return {0}; }
  KElem one() const { return {1}; }
  KElem from_int(std::int64_t n) const {
    const std::int64_t p = impl_->p;
    return {static_cast<std::uint32_t>(((n % p) + p) % p)};
  }

  bool is_zero(KElem a) const { return a.v == 0; }
  bool is_unit(KElem a) const { return a.v != 0; }

  KElem add(KElem a, KElem b) const {
    if (impl_->m == 1) return {(a.v + b.v) % impl_->p};
    return {impl_->add_t[a.v * impl_->q + b.v]};
  }
  KElem neg(KElem a) const {
    if (impl_->m == 1) return {a.v == 0 ? 0 : impl_->p - a.v};
    return {impl_->neg_t[a.v]};
  }
  KElem sub(KElem a, KElem b) const { return add(a, neg(b)); }
  KElem mul(KElem a, KElem b) const {
    if (impl_->m == 1)
      return {static_cast<std::uint32_t>(std::uint64_t(a.v) * b.v % impl_->p)};
    return {impl_->mul_t[a.v * impl_->q + b.v]};
  }
  KElem inv(KElem a) const {
    if (a.v == 0) fail(ErrorCode::InvOfNonUnit, "inverse of zero in the residue field");
    if (impl_->m == 1) return {static_cast<std::uint32_t>(ext_euclid_inv(a.v, impl_->p))};
    return {impl_->inv_t[a.v]};
  }
  KElem pow(KElem a, std::uint64_t e) const {
    KElem r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  /// Unique b with b^p = a (Frobenius is bijective on F_q).
  KElem pth_root(KElem a) const { return pow(a, impl_->q / impl_->p); }

  std::vector<std::uint32_t> digits(KElem a) const {
    std::vector<std::uint32_t> d(impl_->m);
    for (auto& x : d) {
      x = a.v % impl_->p;
      a.v /= impl_->p;
    }
    return d;
  }

  std::string format(KElem a) const { return std::to_string(a.v); }

  /// Integers are read modulo p when m = 1; for m > 1 a token is a code in [0, q).
  KElem parse(std::string_view s) const {
    const std::int64_t v = detail::parse_int(detail::trim(s));
    if (impl_->m == 1) return from_int(v);
    if (v < 0 || v >= static_cast<std::int64_t>(impl_->q))
      fail(ErrorCode::ParseError, "field code out of range: " + std::string(s));
    return {static_cast<std::uint32_t>(v)};
  }

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->m == b.impl_->m &&
            a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint32_t p = 0, m = 0, q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> add_t, mul_t, neg_t, inv_t;
  };

  static std::int64_t ext_euclid_inv(std::int64_t a, std::int64_t n) {
    std::int64_t r0 = n, r1 = a % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t k = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - k * s1};
    }
    return ((s0 % n) + n) % n;
  }

  static void build_tables(Impl& f) {
    const std::uint32_t q = f.q, p = f.p, m = f.m;
    auto to_digits = [&](std::uint32_t c) {
      detail::FpPoly d(m);
      for (auto& x : d) {
        x = c % p;
        c /= p;
      }
      return d;
    };
    auto to_code = [&](const detail::FpPoly& d) {
      std::uint32_t c = 0;
      for (std::size_t i = d.size(); i-- > 0;) c = c * p + static_cast<std::uint32_t>(d[i]);
      return c;
    };
    detail::FpPoly g(f.modulus.begin(), f.modulus.end());
    f.add_t.resize(std::size_t(q) * q);
    f.mul_t.resize(std::size_t(q) * q);
    f.neg_t.resize(q);
    f.inv_t.assign(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
      const auto da = to_digits(a);
      detail::FpPoly na(m);
      for (std::uint32_t i = 0; i < m; ++i) na[i] = (p - da[i]) % p;
      f.neg_t[a] = to_code(na);
      for (std::uint32_t b = 0; b < q; ++b) {
        const auto db = to_digits(b);
        detail::FpPoly s(m);
        for (std::uint32_t i = 0; i < m; ++i) s[i] = (da[i] + db[i]) % p;
        f.add_t[a * q + b] = to_code(s);
        auto pr = detail::fp_mulmod(da, db, g, p);
        pr.resize(m, 0);
        f.mul_t[a * q + b] = to_code(pr);
      }
    }
    for (std::uint32_t a = 1; a < q; ++a) {
      auto r = detail::fp_inverse_mod(to_digits(a), g, p);
      r.resize(m, 0);
      f.inv_t[a] = to_code(r);
    }
  }

  std::shared_ptr<const Impl> impl_;
};

enum class RingKind { Zp2, FqU2 };

struct RingSpec {
  RingKind kind = RingKind::Zp2;
  std::uint32_t p = 3;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> g;  // monic modulus of F_q, little-endian, size m+1

  std::string to_string() const {
    if (kind == RingKind::Zp2) return "zp2:" + std::to_string(p);
    std::string s = "fqu2:" + std::to_string(p) + ":" + std::to_string(m);
    if (m > 1) {
      s += ":";
      for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    }
    return s;
  }
  friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

/// Modulus for F_{p^m}: built-in for q in {9, 25, 27}, otherwise the first
/// monic irreducible in code order.
inline std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return {0, 1};
  if (p == 3 && m == 2) return {1, 0, 1};
  if (p == 5 && m == 2) return {2, 0, 1};
  if (p == 3 && m == 3) return {1, 2, 0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    detail::FpPoly g(m + 1, 0);
    std::uint64_t x = c;
    for (std::uint32_t i = 0; i < m; ++i) {
      g[i] = x % p;
      x /= p;
    }
    g[m] = 1;
    if (detail::fp_is_irreducible(g, p)) return {g.begin(), g.end()};
  }
  fail(ErrorCode::Internal, "no irreducible modulus found");
}

/// Grammar: `zp2:<p>` or `fqu2:<p>:<m>[:<g coefficients, little-endian>]`.
/// The modulus may be given with or without its leading 1.
inline RingSpec parse_ring_spec(std::string_view text) {
  const auto parts = detail::split(text, ':');
  RingSpec s;
  auto as_u32 = [](std::string_view t) {
    const auto v = detail::parse_int(t);
    if (v <= 0 || v > 0xFFFFFFFFLL) fail(ErrorCode::ParseError, "bad ring parameter: " + std::string(t));
    return static_cast<std::uint32_t>(v);
  };
  if (parts.size() == 2 && parts[0] == "zp2") {
    s.kind = RingKind::Zp2;
    s.p = as_u32(parts[1]);
    s.m = 1;
    s.g = {0, 1};
    return s;
  }
  if ((parts.size() == 3 || parts.size() == 4) && parts[0] == "fqu2") {
    s.kind = RingKind::FqU2;
    s.p = as_u32(parts[1]);
    s.m = as_u32(parts[2]);
    if (s.m > 16) fail(ErrorCode::BadParams, "extension degree too large");
    if (s.p == 2) fail(ErrorCode::BadParams, "characteristic 2 is not supported");
    if (!detail::is_prime(s.p)) fail(ErrorCode::BadParams, std::to_string(s.p) + " is not prime");
    if (parts.size() == 4 && s.m > 1) {
      std::vector<std::uint32_t> g;
      for (auto c : detail::split(parts[3], ',')) {
        const auto v = detail::parse_int(c);
        g.push_back(static_cast<std::uint32_t>(((v % s.p) + s.p) % s.p));
      }
      if (g.size() == s.m) g.push_back(1);
      s.g = std::move(g);
    } else {
      s.g = default_modulus(s.p, s.m);
    }
    return s;
  }
  fail(ErrorCode::ParseError, "bad ring spec '" + std::string(text) + "'");
}

/// O_2 = Z/p^2 or F_q[u]/(u^2).
class Ring {
 public:
  using elem = O2Elem;

  explicit Ring(const RingSpec& spec) {
    if (spec.kind == RingKind::Zp2) {
      if (spec.p == 2) fail(ErrorCode::BadParams, "characteristic 2 is not supported");
      if (!detail::is_prime(spec.p)) fail(ErrorCode::BadParams, std::to_string(spec.p) + " is not prime");
      if (spec.p > 65535) fail(ErrorCode::BadParams, "p too large");
    }
    auto impl = std::make_shared<Impl>(Impl{spec, Field(spec.p, spec.kind == RingKind::Zp2 ? 1 : spec.m,
                                                        spec.kind == RingKind::Zp2 ? std::vector<std::uint32_t>{0, 1}
                                                                                   : spec.g),
                                            0, 0});
    impl->q = impl->k.q();
    impl->q2 = impl->q * impl->q;
    impl_ = std::move(impl);
  }
  explicit Ring(std::string_view spec_text) : Ring(parse_ring_spec(spec_text)) {}

  const RingSpec& spec() const { return impl_->spec; }
  const Field& residue_field() const { return impl_->k; }
  RingKind kind() const { return impl_->spec.kind; }
  std::uint32_t p() const { return impl_->spec.p; }
  std::uint32_t q() const { return impl_->q; }
  /// |O_2| = q^2.
  std::uint32_t size() const { return impl_->q2; }
  /// |m| = q.
  std::uint32_t mabs() const { return impl_->q; }

  O2Elem zero() const { return {0}; }
  O2Elem one() const { return {1}; }
  O2Elem pi() const { return {impl_->q}; }
  O2Elem from_int(std::int64_t n) const {
    if (kind() == RingKind::Zp2) {
      const std::int64_t m = impl_->q2;
      return {static_cast<std::uint32_t>(((n % m) + m) % m)};
    }
    return {impl_->k.from_int(n).v};
  }

  bool is_zero(O2Elem x) const { return x.v == 0; }
  bool is_unit(O2Elem x) const { return x.v % impl_->q != 0; }
  bool in_m(O2Elem x) const { return x.v % impl_->q == 0; }

  KElem theta(O2Elem x) const { return {x.v % impl_->q}; }
  O2Elem lift(KElem a) const { return {a.v}; }
  /// The unique b in k with x - lift(theta(x)) = pi * lift(b).
  KElem m_part(O2Elem x) const { return {x.v / impl_->q}; }
  O2Elem pi_times(KElem a) const { return {a.v * impl_->q}; }
  O2Elem make(KElem a0, KElem a1) const { return {a0.v + impl_->q * a1.v}; }

  O2Elem add(O2Elem x, O2Elem y) const {
    if (kind() == RingKind::Zp2) return {(x.v + y.v) % impl_->q2};
    const Field& k = impl_->k;
    return make(k.add(theta(x), theta(y)), k.add(m_part(x), m_part(y)));
  }
  O2Elem neg(O2Elem x) const {
    if (kind() == RingKind::Zp2) return {x.v == 0 ? 0 : impl_->q2 - x.v};
    const Field& k = impl_->k;
    return make(k.neg(theta(x)), k.neg(m_part(x)));
  }
  O2Elem sub(O2Elem x, O2Elem y) const { return add(x, neg(y)); }
  O2Elem mul(O2Elem x, O2Elem y) const {
    if (kind() == RingKind::Zp2)
      return {static_cast<std::uint32_t>(std::uint64_t(x.v) * y.v % impl_->q2)};
    const Field& k = impl_->k;
    const KElem a0 = theta(x), a1 = m_part(x), b0 = theta(y), b1 = m_part(y);
    return make(k.mul(a0, b0), k.add(k.mul(a0, b1), k.mul(a1, b0)));
  }
  /// Residue-field inverse followed by one Newton step y(2 - xy).
  O2Elem inv(O2Elem x) const {
    if (!is_unit(x)) fail(ErrorCode::InvOfNonUnit, "inverse of a non-unit " + format(x));
    const O2Elem y = lift(impl_->k.inv(theta(x)));
    return mul(y, sub(from_int(2), mul(x, y)));
  }
  O2Elem pow(O2Elem x, std::uint64_t e) const {
    O2Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }

  /// Canonical text: an integer for Z/p^2; `a0`, `a1u` or `a0+a1u` otherwise.
  std::string format(O2Elem x) const {
    if (kind() == RingKind::Zp2) return std::to_string(x.v);
    const KElem a0 = theta(x), a1 = m_part(x);
    if (a1.v == 0) return std::to_string(a0.v);
    const std::string us = (a1.v == 1 ? std::string() : std::to_string(a1.v)) + "u";
    if (a0.v == 0) return us;
    return std::to_string(a0.v) + "+" + us;
  }

  /// Accepts a signed integer, or for F_q[u]/(u^2) a sum of an integer term
  /// and a u-term such as `1+2u`, `-u`, `2u+1`.
  O2Elem parse(std::string_view s) const {
    s = detail::trim(s);
    if (s.empty()) fail(ErrorCode::ParseError, "empty ring element");
    if (kind() == RingKind::Zp2) return from_int(detail::parse_int(s));
    const Field& k = impl_->k;
    KElem a0 = k.zero(), a1 = k.zero();
    std::size_t i = 0;
    while (i < s.size()) {
      std::size_t j = i + 1;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string_view term = detail::trim(s.substr(i, j - i));
      bool negative = false;
      if (!term.empty() && (term.front() == '+' || term.front() == '-')) {
        negative = term.front() == '-';
        term = detail::trim(term.substr(1));
      }
      if (term.empty()) fail(ErrorCode::ParseError, "bad ring element '" + std::string(s) + "'");
      if (term.back() == 'u') {
        std::string_view c = detail::trim(term.substr(0, term.size() - 1));
        if (!c.empty() && c.back() == '*') c = detail::trim(c.substr(0, c.size() - 1));
        KElem v = c.empty() ? k.one() : k.parse(c);
        a1 = k.add(a1, negative ? k.neg(v) : v);
      } else {
        KElem v = k.parse(term);
        a0 = k.add(a0, negative ? k.neg(v) : v);
      }
      i = j;
    }
    return make(a0, a1);
  }

  /// All q^2 elements in canonical order.
  std::vector<O2Elem> elements() const {
    std::vector<O2Elem> out(impl_->q2);
    for (std::uint32_t i = 0; i < impl_->q2; ++i) out[i] = {i};
    return out;
  }
  std::vector<O2Elem> units() const {
    std::vector<O2Elem> out;
    for (std::uint32_t i = 0; i < impl_->q2; ++i)
      if (is_unit({i})) out.push_back({i});
    return out;
  }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.impl_ == b.impl_ || a.impl_->spec == b.impl_->spec;
  }

 private:
  struct Impl {
    RingSpec spec;
    Field k;
    std::uint32_t q;
    std::uint32_t q2;
  };
  std::shared_ptr<const Impl> impl_;
};

inline std::vector<KElem> field_elements(const Field& k) {
  std::vector<KElem> out(k.q());
  for (std::uint32_t i = 0; i < k.q(); ++i) out[i] = {i};
  return out;
}

}  // namespace o2power
