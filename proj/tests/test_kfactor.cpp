#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace o2power;
using namespace o2test;

namespace {

// All monic polynomials of degree d over k.
std::vector<PolyK> all_monic(const Field& k, std::size_t d) {
  std::vector<PolyK> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= k.q();
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<KElem> c(d + 1);
    std::uint64_t x = code;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = KElem{static_cast<std::uint32_t>(x % k.q())};
      x /= k.q();
    }
    c[d] = k.one();
    out.emplace_back(k, std::move(c));
  }
  return out;
}

bool irreducible_by_trial_division(const PolyK& f) {
  for (std::size_t d = 1; 2 * d <= f.deg(); ++d)
    for (const auto& g : all_monic(f.ring(), d))
      if (mod(f, g).is_zero()) return false;
  return true;
}

}  // namespace

TEST(KFactor, IrreducibilityMatchesTrialDivision) {
  for (auto k : {Field(3), Field(5), Field(3, 2, {1, 0, 1})}) {
    for (std::size_t d = 1; d <= (k.q() == 3 ? 5u : 3u); ++d)
      for (const auto& f : all_monic(k, d)) EXPECT_EQ(is_irreducible_k(f), irreducible_by_trial_division(f)) << f.pretty();
  }
}

TEST(KFactor, IrreducibleCountsMatchNecklaceFormula) {
  for (std::uint32_t p : {3u, 5u}) {
    const Field k(p);
    for (std::size_t d = 1; d <= 4; ++d) {
      std::size_t n = 0;
      for (const auto& f : monic_irreducibles(k, d)) n += (f != PolyK::variable(k));
      EXPECT_EQ(BigInt(n), count_N(p, d)) << p << " " << d;
    }
  }
}

TEST(KFactor, FactorizationReproducesInput) {
  std::mt19937_64 rng(4);
  for (auto k : {Field(3), Field(5), Field(7), Field(3, 2, {1, 0, 1})}) {
    for (int trial = 0; trial < 150; ++trial) {
      PolyK f = random_monic_k(k, 1 + rng() % 10, rng);
      if (trial % 3 == 0) f = f * f;
      const auto facs = k_factor(f);
      PolyK prod = PolyK::constant(k, k.one());
      for (std::size_t i = 0; i < facs.size(); ++i) {
        EXPECT_TRUE(facs[i].f.is_monic());
        EXPECT_TRUE(irreducible_by_trial_division(facs[i].f) || facs[i].f.deg() > 6);
        if (i) EXPECT_TRUE(canonical_less(facs[i - 1].f, facs[i].f));
        prod *= pow(facs[i].f, facs[i].mult);
      }
      EXPECT_EQ(prod, f);
    }
  }
}

TEST(KFactor, CantorZassenhausPathIsDeterministic) {
  // q^deg > 3^6 so equal-degree splitting is randomized
  const Field k(7);
  const PolyK f = PolyK::from_ints(k, {3, 1, 0, 0, 1}) * PolyK::from_ints(k, {5, 0, 2, 0, 1}) *
                  PolyK::from_ints(k, {1, 3, 1, 0, 1});
  const auto a = k_factor(f), b = k_factor(f);
  ASSERT_EQ(a.size(), b.size());
  PolyK prod = PolyK::constant(k, k.one());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].f, b[i].f);
    prod *= pow(a[i].f, a[i].mult);
  }
  EXPECT_EQ(prod, f);
  const auto c = k_factor(f, 12345);
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].f, c[i].f);
}

TEST(KFactor, SquarefreeInCharacteristicP) {
  const Field k(3);
  // t^3 + 2 = (t + 2)^3 over F_3
  const auto facs = k_factor(PolyK::from_ints(k, {2, 0, 0, 1}));
  ASSERT_EQ(facs.size(), 1u);
  EXPECT_EQ(facs[0].f, PolyK::from_ints(k, {2, 1}));
  EXPECT_EQ(facs[0].mult, 3u);
  EXPECT_FALSE(is_squarefree_k(PolyK::from_ints(k, {2, 0, 0, 1})));
  EXPECT_TRUE(is_squarefree_k(PolyK::from_ints(k, {1, 0, 1})));
}
