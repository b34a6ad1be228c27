#include <gtest/gtest.h>

#include <cstdlib>
#include <map>

#include "test_util.hpp"

using namespace o2power;

namespace {

MatO2 M(const Ring& R, std::initializer_list<std::int64_t> xs) { return MatO2::from_ints(R, 2, xs); }

}  // namespace

TEST(Oracle, EnumerationSizes) {
  EXPECT_EQ(enumerate_gl(Field(3), 2).size(), 48u);
  EXPECT_EQ(enumerate_gl(Field(5), 2).size(), 480u);
  EXPECT_EQ(enumerate_gl(Ring("zp2:3"), 1).size(), 6u);
  const auto gl = enumerate_gl(Ring("zp2:3"), 2);
  EXPECT_EQ(BigInt(gl.size()), gl_order(2, 3, 3));
  for (std::size_t i = 1; i < gl.size(); ++i) EXPECT_LT(gl[i - 1].key(), gl[i].key());
}

TEST(Oracle, BudgetGuard) {
  EXPECT_THROW(enumerate_gl(Ring("zp2:5"), 3), Error);
}

TEST(Oracle, CubeRootCounterexample) {
  const Ring R("zp2:3");
  const auto gl = enumerate_gl(R, 2);
  const MatO2 A = M(R, {3, 1, 5, 0});
  const auto od = orbit_and_centralizer(gl, A);
  EXPECT_EQ(od.orbit_size, 54u);
  EXPECT_EQ(od.centralizer_size, 72u);
  EXPECT_EQ(od.order, 12u);
  EXPECT_FALSE(power_image(gl, 3).count(A.key()));
  EXPECT_TRUE(monic_divisors_brute(PolyO2::from_ints(R, {-5, 0, 0, -3, 0, 0, 1}), 2).empty());
}

TEST(Oracle, SquareRootCounterexample) {
  const Ring R("zp2:3");
  const Field& k = R.residue_field();
  const MatO2 A = M(R, {5, 0, 0, 2});
  EXPECT_FALSE(power_image(R, 2, 2).count(A.key()));
  // the reduction 2I does have square roots in GL_2(F_3): all B with charpoly t^2 + 1
  const auto roots = power_preimage(theta(A), 2);
  EXPECT_EQ(roots.size(), 6u);
  for (const auto& B : roots) EXPECT_EQ(charpoly(B), PolyK::from_ints(k, {1, 0, 1}));
}

TEST(Oracle, ConjugacyClasses) {
  const auto cp = conjugacy_classes(enumerate_gl(Field(3), 2));
  EXPECT_EQ(cp.rep.size(), 8u);  // q^2 - 1 classes in GL_2(F_q)
  std::size_t total = 0;
  for (auto s : cp.class_size) total += s;
  EXPECT_EQ(total, 48u);
  for (std::size_t i = 0; i < cp.elements.size(); ++i) EXPECT_LE(cp.rep[cp.class_of[i]], i);
}

TEST(Oracle, CensusZp2) {
  const auto c = census(Ring("zp2:3"), 2, 2);
  const std::map<std::string, std::uint64_t> want{
      {"gl", 3888},          {"classes", 78},         {"rs", 2430},         {"cc", 432},
      {"cyclic_not_compatible", 864}, {"other", 162}, {"rs_or_cc", 2862}, {"rs_classes", 36},
      {"rs_or_cc_classes", 42}, {"image", 1236},      {"rs_image", 486},    {"rs_or_cc_image", 702},
      {"image_classes", 36}, {"rs_image_classes", 9}, {"rs_or_cc_image_classes", 12}};
  for (const auto& [key, v] : want) EXPECT_EQ(c.totals.at(key), v) << key;
}

// n = 1 census against the unit group directly.
TEST(Oracle, CensusDegreeOne) {
  for (const char* spec : {"zp2:3", "zp2:5", "fqu2:3:1"}) {
    const Ring R(spec);
    const auto c = census(R, 1, 2);
    EXPECT_EQ(c.totals.at("gl"), R.units().size());
    EXPECT_EQ(c.totals.at("rs"), R.units().size());
    EXPECT_EQ(c.totals.at("classes"), R.units().size());
    EXPECT_EQ(c.totals.at("image"), R.units().size() / 2);
  }
}

TEST(Oracle, VerifyTheorems) {
  const Ring R("zp2:3");
  for (std::uint64_t L : {2u, 5u}) {
    EXPECT_EQ(verify_theorem(Theorem::T1, R, 2, L).totals.at("mismatches"), 0u);
    EXPECT_EQ(verify_theorem(Theorem::T2, R, 2, L).totals.at("mismatches"), 0u);
    EXPECT_EQ(verify_theorem(Theorem::C44, R, 2, L).totals.at("mismatches"), 0u);
  }
  EXPECT_THROW(verify_theorem(Theorem::T1, R, 2, 3), Error);
  const Ring U("fqu2:3:1");
  EXPECT_EQ(verify_theorem(Theorem::T1, U, 2, 2).totals.at("mismatches"), 0u);
  EXPECT_EQ(verify_theorem(Theorem::T2, U, 2, 4).totals.at("mismatches"), 0u);
}

TEST(Oracle, FamiliesPartitionGl2) {
  const Ring R("zp2:3");
  const auto gl = enumerate_gl(R, 2);
  const auto cp = conjugacy_classes(gl);
  std::vector<int> hit(cp.rep.size(), 0);
  for (const auto& f : gl2_zp2_families(3)) ++hit[cp.class_of.at(cp.index.at(f.matrix.key()))];
  for (std::size_t c = 0; c < hit.size(); ++c) EXPECT_EQ(hit[c], 1) << cp.elements[cp.rep[c]].to_text();
}

TEST(Oracle, SmallestNonSquare) {
  EXPECT_EQ(smallest_nonsquare_unit(Ring("zp2:3")), Ring("zp2:3").from_int(2));
  EXPECT_EQ(smallest_nonsquare_unit(Ring("zp2:5")), Ring("zp2:5").from_int(2));
}

TEST(Oracle, QuadraticLiftsOfTSquaredPlusOne) {
  const Ring R("zp2:3");
  const auto rows = table1(R);
  ASSERT_EQ(rows.size(), 9u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.irreducible);
    EXPECT_EQ(theta(r.F), PolyK::from_ints(R.residue_field(), {1, 0, 1}));
  }
  // reducible lifts exist for a split reduction, e.g. t^2 - 1
  EXPECT_FALSE(is_irreducible_brute(PolyO2::from_ints(R, {-1, 0, 1})));
}
