#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace o2power;
using namespace o2test;

TEST(Poly, ParseAndPrint) {
  const Ring R("zp2:3");
  const PolyO2 F = parse_poly(R, "4,3,1");
  EXPECT_EQ(F.deg(), 2u);
  EXPECT_EQ(F.pretty(), "t^2 + 3t + 4");
  EXPECT_EQ(F.to_text(), "4,3,1");
  EXPECT_EQ(parse_poly(R, "-5,-6,1").to_text(), "4,3,1");
  const Ring U("fqu2:3:1");
  EXPECT_EQ(parse_poly(U, "1+u,-2u,1").pretty(), "t^2 + ut + (1+u)");
  EXPECT_EQ(PolyO2(R).pretty(), "0");
}

TEST(Poly, TrimAndDegree) {
  const Ring R("zp2:3");
  const PolyO2 F = PolyO2::from_ints(R, {1, 2, 9, 0});
  EXPECT_EQ(F.deg(), 1u);
  EXPECT_TRUE((F - F).is_zero());
}

TEST(Poly, CanonicalOrder) {
  const Ring R("zp2:3");
  const PolyO2 a = PolyO2::from_ints(R, {8, 1}), b = PolyO2::from_ints(R, {0, 0, 1}),
               c = PolyO2::from_ints(R, {1, 0, 1}), d = PolyO2::from_ints(R, {0, 1, 1});
  EXPECT_TRUE(canonical_less(a, b));
  EXPECT_TRUE(canonical_less(b, c));
  EXPECT_TRUE(canonical_less(d, c));  // constant term compared first
  EXPECT_FALSE(canonical_less(c, d));
}

TEST(Poly, MonicDivmodOverO2) {
  std::mt19937_64 rng(1);
  for (const auto& spec : desk_rings()) {
    const Ring R(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t dg = 1 + rng() % 4;
      const PolyO2 G = random_poly_o2(R, dg, rng) + PolyO2::monomial(R, R.one(), dg);
      const PolyO2 F = random_poly_o2(R, 1 + rng() % 9, rng);
      const auto [Q, Rm] = monic_divmod(F, G);
      EXPECT_EQ(Q * G + Rm, F);
      EXPECT_TRUE(Rm.is_zero() || Rm.deg() < G.deg());
    }
  }
}

TEST(Poly, NonMonicDivisorRejected) {
  const Ring R("zp2:3");
  EXPECT_THROW(monic_divmod(PolyO2::from_ints(R, {1, 1, 1}), PolyO2::from_ints(R, {1, 3})), Error);
}

TEST(Poly, FieldGcdAndInverse) {
  std::mt19937_64 rng(2);
  const Field k(5);
  for (int trial = 0; trial < 200; ++trial) {
    const PolyK a = random_poly_k(k, 1 + rng() % 6, rng), b = random_poly_k(k, 1 + rng() % 6, rng);
    if (a.is_zero() && b.is_zero()) continue;
    const ExtGcdK e = ext_gcd(a, b);
    EXPECT_EQ(e.s * a + e.t * b, e.g);
    EXPECT_TRUE(e.g.is_monic());
    if (!a.is_zero()) EXPECT_TRUE(mod(a, e.g).is_zero());
    if (!b.is_zero()) EXPECT_TRUE(mod(b, e.g).is_zero());
  }
  const PolyK m = PolyK::from_ints(k, {2, 0, 1});  // t^2 + 2, irreducible mod 5
  for (int trial = 0; trial < 50; ++trial) {
    const PolyK a = random_poly_k(k, 2, rng);
    if (a.is_zero()) continue;
    EXPECT_TRUE(mulmod(a, inverse_mod(a, m), m).is_one());
  }
}

TEST(Poly, ThetaLiftMPart) {
  std::mt19937_64 rng(3);
  for (const auto& spec : desk_rings()) {
    const Ring R(spec);
    for (int trial = 0; trial < 100; ++trial) {
      const PolyO2 F = random_poly_o2(R, 1 + rng() % 6, rng);
      const PolyO2 G = random_poly_o2(R, 1 + rng() % 6, rng);
      EXPECT_EQ(theta(F * G), theta(F) * theta(G));
      EXPECT_EQ(theta(F + G), theta(F) + theta(G));
      EXPECT_EQ(F - lift(R, theta(F)), pi_times(R, m_part(F - lift(R, theta(F)))));
    }
  }
}

TEST(Poly, DerivativeComposeSubstitute) {
  const Ring R("zp2:5");
  const PolyO2 F = PolyO2::from_ints(R, {7, 2, 0, 1});
  EXPECT_EQ(derivative(F), PolyO2::from_ints(R, {2, 0, 3}));
  const PolyO2 G = PolyO2::from_ints(R, {1, 1});
  // F(t+1) = (t+1)^3 + 2(t+1) + 7 = t^3 + 3t^2 + 5t + 10
  EXPECT_EQ(compose(F, G), PolyO2::from_ints(R, {10, 5, 3, 1}));
  EXPECT_EQ(substitute_power(F, 2), PolyO2::from_ints(R, {7, 0, 2, 0, 0, 0, 1}));
  EXPECT_EQ(pow(G, 5), PolyO2::from_ints(R, {1, 5, 10, 10, 5, 1}));
}
