#pragma once
/// @file poly.hpp
/// Dense univariate polynomials over a coefficient ring (the residue field or O_2).

#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "o2power/error.hpp"
#include "o2power/ring.hpp"

namespace o2power {

template <class R>
concept CoefficientRing = requires(const R& r, typename R::elem a, typename R::elem b) {
  { r.zero() } -> std::same_as<typename R::elem>;
  { r.one() } -> std::same_as<typename R::elem>;
  { r.from_int(std::int64_t{}) } -> std::same_as<typename R::elem>;
  { r.add(a, b) } -> std::same_as<typename R::elem>;
  { r.sub(a, b) } -> std::same_as<typename R::elem>;
  { r.neg(a) } -> std::same_as<typename R::elem>;
  { r.mul(a, b) } -> std::same_as<typename R::elem>;
  { r.inv(a) } -> std::same_as<typename R::elem>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.is_unit(a) } -> std::convertible_to<bool>;
  { r.format(a) } -> std::convertible_to<std::string>;
  { r == r } -> std::convertible_to<bool>;
};

template <CoefficientRing R>
inline void require_same_ring(const R& a, const R& b) {
  if (!(a == b)) fail(ErrorCode::RingMismatch, "operands live over different rings");
}

/// Little-endian coefficients without trailing zeros; the zero polynomial is empty.
template <CoefficientRing R>
class Poly {
 public:
  using ring_type = R;
  using elem = typename R::elem;

  explicit Poly(R ring) : ring_(std::move(ring)) {}
  Poly(R ring, std::vector<elem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const R& r, elem a) { return Poly(r, {a}); }
  static Poly variable(const R& r) { return Poly(r, {r.zero(), r.one()}); }
  static Poly monomial(const R& r, elem a, std::size_t k) {
    std::vector<elem> c(k + 1, r.zero());
    c[k] = a;
    return Poly(r, std::move(c));
  }
  static Poly from_ints(const R& r, std::initializer_list<std::int64_t> cs) {
    std::vector<elem> c;
    for (auto v : cs) c.push_back(r.from_int(v));
    return Poly(r, std::move(c));
  }

  const R& ring() const { return ring_; }
  const std::vector<elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t deg() const {
    if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
    return c_.size() - 1;
  }
  elem lc() const {
    if (c_.empty()) fail(ErrorCode::ZeroPolynomial, "leading coefficient of the zero polynomial");
    return c_.back();
  }
  elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  bool is_monic() const { return !c_.empty() && c_.back() == ring_.one(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == ring_.one(); }
  bool is_constant() const { return c_.size() <= 1; }

  elem eval(elem x) const {
    elem r = ring_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) r = ring_.add(ring_.mul(r, x), c_[i]);
    return r;
  }

  Poly& operator+=(const Poly& o) {
    require_same_ring(ring_, o.ring_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.add(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    require_same_ring(ring_, o.ring_);
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = ring_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = ring_.neg(x);
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.c_.empty() || b.c_.empty()) return Poly(a.ring_);
    const R& r = a.ring_;
    std::vector<elem> c(a.c_.size() + b.c_.size() - 1, r.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (r.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = r.add(c[i + j], r.mul(a.c_[i], b.c_[j]));
    }
    return Poly(r, std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(elem a) const {
    std::vector<elem> c = c_;
    for (auto& x : c) x = ring_.mul(x, a);
    return Poly(ring_, std::move(c));
  }
  /// Multiplication by t^k.
  Poly shifted(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<elem> c(k, ring_.zero());
    c.insert(c.end(), c_.begin(), c_.end());
    return Poly(ring_, std::move(c));
  }
  /// Remainder modulo t^k.
  Poly truncated(std::size_t k) const {
    std::vector<elem> c(c_.begin(), c_.begin() + std::min(k, c_.size()));
    return Poly(ring_, std::move(c));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.ring_ == b.ring_ && a.c_ == b.c_; }

  /// Comma-separated canonical coefficients, little-endian.
  std::string to_text() const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + ring_.format(c_[i]);
    return s;
  }

  /// Human-readable form, highest degree first, e.g. `t^2 + 3t + 4`.
  std::string pretty(std::string_view var = "t") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (ring_.is_zero(c_[i])) continue;
      std::string coef = ring_.format(c_[i]);
      if (coef.find('+') != std::string::npos) coef = "(" + coef + ")";
      std::string term;
      if (i == 0)
        term = coef;
      else
        term = (c_[i] == ring_.one() ? std::string() : coef) + std::string(var) +
               (i > 1 ? "^" + std::to_string(i) : std::string());
      s += (s.empty() ? "" : " + ") + term;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && ring_.is_zero(c_.back())) c_.pop_back();
  }

  R ring_;
  std::vector<elem> c_;
};

using PolyK = Poly<Field>;
using PolyO2 = Poly<Ring>;

/// Canonical order: degree first, then coefficient codes compared from the constant term up.
template <CoefficientRing R>
inline bool canonical_less(const Poly<R>& a, const Poly<R>& b) {
  if (a.coeffs().size() != b.coeffs().size()) return a.coeffs().size() < b.coeffs().size();
  return a.coeffs() < b.coeffs();
}

template <CoefficientRing R>
inline Poly<R> derivative(const Poly<R>& f) {
  const R& r = f.ring();
  if (f.coeffs().size() <= 1) return Poly<R>(r);
  std::vector<typename R::elem> c(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    c[i - 1] = r.mul(r.from_int(static_cast<std::int64_t>(i)), f.coeffs()[i]);
  return Poly<R>(r, std::move(c));
}

/// f(g).
template <CoefficientRing R>
inline Poly<R> compose(const Poly<R>& f, const Poly<R>& g) {
  require_same_ring(f.ring(), g.ring());
  Poly<R> r(f.ring());
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    r = r * g + Poly<R>::constant(f.ring(), f.coeffs()[i]);
  return r;
}

template <CoefficientRing R>
inline Poly<R> pow(Poly<R> f, std::uint64_t e) {
  Poly<R> r = Poly<R>::constant(f.ring(), f.ring().one());
  while (e) {
    if (e & 1) r *= f;
    e >>= 1;
    if (e) f = f * f;
  }
  return r;
}

/// f(t^L).
template <CoefficientRing R>
inline Poly<R> substitute_power(const Poly<R>& f, std::size_t L) {
  const R& r = f.ring();
  if (f.is_zero()) return f;
  std::vector<typename R::elem> c(f.deg() * L + 1, r.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i * L] = f.coeffs()[i];
  return Poly<R>(r, std::move(c));
}

/// Division by a monic divisor over any commutative ring: F = Q*G + R, deg R < deg G.
template <CoefficientRing R>
inline std::pair<Poly<R>, Poly<R>> monic_divmod(const Poly<R>& F, const Poly<R>& G) {
  require_same_ring(F.ring(), G.ring());
  if (!G.is_monic()) fail(ErrorCode::NonMonicDivisor, "divisor is not monic");
  const R& r = F.ring();
  const std::size_t dg = G.deg();
  std::vector<typename R::elem> rem = F.coeffs();
  if (rem.size() <= dg) return {Poly<R>(r), F};
  std::vector<typename R::elem> quo(rem.size() - dg, r.zero());
  for (std::size_t i = rem.size(); i-- > dg;) {
    const auto c = rem[i];
    if (r.is_zero(c)) continue;
    quo[i - dg] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[i - dg + j] = r.sub(rem[i - dg + j], r.mul(c, G.coeffs()[j]));
  }
  rem.resize(dg);
  return {Poly<R>(r, std::move(quo)), Poly<R>(r, std::move(rem))};
}

template <CoefficientRing R>
inline Poly<R> monic_mod(const Poly<R>& F, const Poly<R>& G) {
  return monic_divmod(F, G).second;
}

/// Quotient of an exact division by a monic polynomial; fails if the remainder is nonzero.
template <CoefficientRing R>
inline Poly<R> exact_quotient(const Poly<R>& F, const Poly<R>& G) {
  auto [q, rem] = monic_divmod(F, G);
  if (!rem.is_zero()) fail(ErrorCode::Internal, "division expected to be exact");
  return q;
}

// ---------------------------------------------------------------- field side

inline PolyK make_monic(const PolyK& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot normalise the zero polynomial");
  return f.scaled(f.ring().inv(f.lc()));
}

inline std::pair<PolyK, PolyK> divmod(const PolyK& a, const PolyK& b) {
  if (b.is_zero()) fail(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const Field& k = b.ring();
  const KElem inv_lc = k.inv(b.lc());
  auto [q, r] = monic_divmod(a, b.scaled(inv_lc));
  return {q.scaled(inv_lc), r};
}

inline PolyK mod(const PolyK& a, const PolyK& b) { return divmod(a, b).second; }

/// Monic gcd; gcd(0, 0) = 0.
inline PolyK gcd(PolyK a, PolyK b) {
  while (!b.is_zero()) {
    PolyK r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : make_monic(a);
}

struct ExtGcdK {
  PolyK g, s, t;  // s*a + t*b = g, g monic
};

inline ExtGcdK ext_gcd(const PolyK& a, const PolyK& b) {
  const Field& k = a.ring();
  PolyK r0 = a, r1 = b;
  PolyK s0 = PolyK::constant(k, k.one()), s1(k);
  PolyK t0(k), t1 = PolyK::constant(k, k.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const KElem c = k.inv(r0.lc());
  return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

/// a^{-1} mod m over the field; NotCoprime if gcd(a, m) != 1.
inline PolyK inverse_mod(const PolyK& a, const PolyK& m) {
  auto e = ext_gcd(mod(a, m), m);
  if (!e.g.is_one()) fail(ErrorCode::NotCoprime, "polynomial is not invertible modulo the given modulus");
  return mod(e.s, m);
}

inline PolyK mulmod(const PolyK& a, const PolyK& b, const PolyK& m) { return mod(a * b, m); }

inline PolyK powmod(PolyK b, std::uint64_t e, const PolyK& m) {
  const Field& k = m.ring();
  PolyK r = mod(PolyK::constant(k, k.one()), m);
  b = mod(b, m);
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return r;
}

/// f(g) mod m by Horner's rule.
inline PolyK compose_mod(const PolyK& f, const PolyK& g, const PolyK& m) {
  PolyK r(f.ring());
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    r = mod(r * g + PolyK::constant(f.ring(), f.coeffs()[i]), m);
  return r;
}

// ------------------------------------------------------ reduction and lifting

inline PolyK theta(const PolyO2& F) {
  const Ring& R = F.ring();
  std::vector<KElem> c;
  c.reserve(F.coeffs().size());
  for (auto x : F.coeffs()) c.push_back(R.theta(x));
  return PolyK(R.residue_field(), std::move(c));
}

/// Canonical lift, coefficient by coefficient.
inline PolyO2 lift(const Ring& R, const PolyK& f) {
  require_same_ring(R.residue_field(), f.ring());
  std::vector<O2Elem> c;
  c.reserve(f.coeffs().size());
  for (auto x : f.coeffs()) c.push_back(R.lift(x));
  return PolyO2(R, std::move(c));
}

/// pi * lift(f).
inline PolyO2 pi_times(const Ring& R, const PolyK& f) {
  require_same_ring(R.residue_field(), f.ring());
  std::vector<O2Elem> c;
  c.reserve(f.coeffs().size());
  for (auto x : f.coeffs()) c.push_back(R.pi_times(x));
  return PolyO2(R, std::move(c));
}

/// For F with theta(F) = 0, the unique d with F = pi * lift(d).
inline PolyK m_part(const PolyO2& F) {
  const Ring& R = F.ring();
  std::vector<KElem> c;
  c.reserve(F.coeffs().size());
  for (auto x : F.coeffs()) {
    if (!R.in_m(x)) fail(ErrorCode::Internal, "coefficient outside the maximal ideal");
    c.push_back(R.m_part(x));
  }
  return PolyK(R.residue_field(), std::move(c));
}

// ------------------------------------------------------------------- text

template <CoefficientRing R>
inline Poly<R> parse_poly(const R& r, std::string_view text) {
  std::vector<typename R::elem> c;
  for (auto tok : detail::split(text, ',')) c.push_back(r.parse(tok));
  return Poly<R>(r, std::move(c));
}

}  // namespace o2power
