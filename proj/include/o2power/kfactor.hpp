#pragma once
/// @file kfactor.hpp
/// Factorization and irreducibility over the residue field F_q.

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <utility>
#include <vector>

#include "o2power/poly.hpp"

namespace o2power {

struct KFactor {
  PolyK f;
  std::size_t mult;
};

/// Default seed for the randomized equal-degree split.
inline constexpr std::uint64_t kDefaultSeed = 0x6f32706f776572ULL;

namespace detail {

// q^e, saturating at max+1 so size guards never overflow.
inline std::uint64_t ipow_sat(std::uint64_t b, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

inline PolyK x_poly(const Field& k) { return PolyK::variable(k); }

/// p-th root of a polynomial whose derivative vanishes.
inline PolyK pth_root_poly(const PolyK& f) {
  const Field& k = f.ring();
  const std::size_t p = k.p();
  std::vector<KElem> c(f.deg() / p + 1, k.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = k.pth_root(f[i * p]);
  return PolyK(k, std::move(c));
}

/// Squarefree decomposition of a monic f: pairs (g_i, i) with f = prod g_i^i.
inline std::vector<std::pair<PolyK, std::size_t>> squarefree_decomposition(const PolyK& f) {
  const Field& k = f.ring();
  std::vector<std::pair<PolyK, std::size_t>> out;
  if (f.deg() == 0) return out;
  const PolyK df = derivative(f);
  if (df.is_zero()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root_poly(f))) out.emplace_back(g, m * k.p());
    return out;
  }
  PolyK c = gcd(f, df);
  PolyK w = exact_quotient(f, c);
  std::size_t i = 1;
  while (!w.is_one()) {
    PolyK y = gcd(w, c);
    PolyK fac = exact_quotient(w, y);
    if (!fac.is_one()) out.emplace_back(fac, i);
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (!c.is_one()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root_poly(c))) out.emplace_back(g, m * k.p());
  }
  return out;
}

/// Distinct-degree factorization of a monic squarefree f.
inline std::vector<std::pair<PolyK, std::size_t>> distinct_degree(PolyK f) {
  const Field& k = f.ring();
  std::vector<std::pair<PolyK, std::size_t>> out;
  PolyK h = x_poly(k);
  std::size_t i = 1;
  while (f.deg() >= 2 * i) {
    h = powmod(h, k.q(), f);
    PolyK g = gcd(h - x_poly(k), f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = exact_quotient(f, g);
      h = mod(h, f);
    }
    ++i;
  }
  if (f.deg() > 0) out.emplace_back(f, f.deg());
  return out;
}

inline bool is_irreducible_monic(const PolyK& f);

/// All monic irreducibles of degree d over k in canonical order (cached).
inline const std::vector<PolyK>& monic_irreducibles_cached(const Field& k, std::size_t d) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>, std::size_t>,
                  std::vector<PolyK>>
      cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(k.p(), k.m(), k.modulus(), d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const std::uint64_t count = ipow_sat(k.q(), d, 1u << 24);
  if (count > (1u << 24)) fail(ErrorCode::BadParams, "too many candidates to enumerate irreducibles");
  std::vector<PolyK> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<KElem> c(d + 1);
    std::uint64_t x = code;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = KElem{static_cast<std::uint32_t>(x % k.q())};
      x /= k.q();
    }
    c[d] = k.one();
    PolyK f(k, std::move(c));
    if (is_irreducible_monic(f)) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), canonical_less<Field>);
  return cache.emplace(key, std::move(out)).first->second;
}

/// Equal-degree splitting of a monic squarefree g whose irreducible factors all have degree d.
inline void equal_degree(const PolyK& g, std::size_t d, std::mt19937_64& rng, std::vector<PolyK>& out) {
  const Field& k = g.ring();
  if (g.deg() == d) {
    out.push_back(g);
    return;
  }
  if (ipow_sat(k.q(), d, 729) <= 729) {
    PolyK rest = g;
    for (const auto& cand : monic_irreducibles_cached(k, d)) {
      if (rest.deg() < d) break;
      if (monic_mod(rest, cand).is_zero()) {
        out.push_back(cand);
        rest = exact_quotient(rest, cand);
      }
    }
    if (!rest.is_one()) fail(ErrorCode::Internal, "equal-degree trial division left a cofactor");
    return;
  }
  // Cantor-Zassenhaus, odd q: gcd(a^((q^d-1)/2) - 1, g) splits with probability ~1/2.
  std::uniform_int_distribution<std::uint32_t> pick(0, k.q() - 1);
  for (;;) {
    std::vector<KElem> c(g.deg());
    for (auto& x : c) x = KElem{pick(rng)};
    PolyK a(k, std::move(c));
    if (a.is_constant()) continue;
    // a^((q^d-1)/2) = (a^(1+q+...+q^(d-1)))^((q-1)/2)
    PolyK norm = mod(PolyK::constant(k, k.one()), g), frob = mod(a, g);
    for (std::size_t i = 0; i < d; ++i) {
      norm = mulmod(norm, frob, g);
      frob = powmod(frob, k.q(), g);
    }
    PolyK b = powmod(norm, (k.q() - 1) / 2, g) - PolyK::constant(k, k.one());
    PolyK h = gcd(b, g);
    if (h.is_zero() || h.is_one() || h.deg() == g.deg()) continue;
    equal_degree(h, d, rng, out);
    equal_degree(exact_quotient(g, h), d, rng, out);
    return;
  }
}

inline bool is_irreducible_monic(const PolyK& f) {
  const Field& k = f.ring();
  const std::size_t n = f.deg();
  if (n == 0) return false;
  if (n == 1) return true;
  const PolyK x = mod(x_poly(k), f);
  auto frob_power = [&](std::size_t e) {
    PolyK h = x;
    for (std::size_t i = 0; i < e; ++i) h = powmod(h, k.q(), f);
    return h;
  };
  if (frob_power(n) != x) return false;
  for (std::size_t r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime(r)) continue;
    if (!gcd(frob_power(n / r) - x, f).is_one()) return false;
  }
  return true;
}

}  // namespace detail

/// Irreducibility over k (Rabin's test on the monic associate).
inline bool is_irreducible_k(const PolyK& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "irreducibility of the zero polynomial");
  return detail::is_irreducible_monic(make_monic(f));
}

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
/// The leading coefficient of f times the product of the factors gives back f.
inline std::vector<KFactor> k_factor(const PolyK& f, std::uint64_t seed = kDefaultSeed) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "factorization of the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<KFactor> out;
  for (auto& [sq, mult] : detail::squarefree_decomposition(make_monic(f))) {
    for (auto& [g, d] : detail::distinct_degree(sq)) {
      std::vector<PolyK> parts;
      detail::equal_degree(g, d, rng, parts);
      for (auto& h : parts) out.push_back({std::move(h), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const KFactor& a, const KFactor& b) {
    if (canonical_less(a.f, b.f)) return true;
    if (canonical_less(b.f, a.f)) return false;
    return a.mult < b.mult;
  });
  // Different squarefree layers never share a factor, so no merging is needed.
  return out;
}

/// Monic irreducibles of degree d over k, canonical order.
inline std::vector<PolyK> monic_irreducibles(const Field& k, std::size_t d) {
  return detail::monic_irreducibles_cached(k, d);
}

inline bool is_squarefree_k(const PolyK& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "squarefree test of the zero polynomial");
  if (f.deg() == 0) return true;
  return gcd(f, derivative(f)).is_one();
}

}  // namespace o2power
