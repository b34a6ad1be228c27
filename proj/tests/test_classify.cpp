#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace o2power;
using namespace o2test;

namespace {

MatO2 M(const Ring& R, std::size_t n, std::initializer_list<std::int64_t> xs) { return MatO2::from_ints(R, n, xs); }

MatO2 conjugate(const MatO2& A, std::mt19937_64& rng) {
  const MatO2 S = random_gl(A.ring(), A.n(), rng);
  return S * A * inverse(S);
}

void expect_canonical_identity(const MatO2& A, const CanonicalForm& c) {
  EXPECT_TRUE(is_gl(c.conjugator));
  EXPECT_EQ(inverse(c.conjugator) * A * c.conjugator, c.form);
}

}  // namespace

TEST(Classify, Examples) {
  const Ring R("zp2:3");
  const auto a = classify(M(R, 2, {3, 1, 5, 0}));
  EXPECT_EQ(a.kind, MatrixKind::RegularSemisimple);
  EXPECT_EQ(a.charpoly, PolyO2::from_ints(R, {-5, -3, 1}));
  EXPECT_EQ(a.centralizer_order, BigInt(72));
  EXPECT_EQ(classify(M(R, 2, {0, -1, 1, -1})).kind, MatrixKind::CyclicNotCompatible);
  const auto c = classify(M(R, 2, {1, 1, 0, 1}));
  EXPECT_EQ(c.kind, MatrixKind::CompatibleCyclic);
  ASSERT_TRUE(c.factorization);
  EXPECT_EQ(*c.factorization, (FundFactorization{{PolyO2::from_ints(R, {-1, 1}), 2}}));
  EXPECT_EQ(c.centralizer_order, BigInt(54));
  const auto o = classify(M(R, 2, {5, 0, 0, 2}));
  EXPECT_EQ(o.kind, MatrixKind::Other);
  EXPECT_FALSE(o.centralizer_order);
  EXPECT_THROW(centralizer_order(o), Error);
  EXPECT_EQ(classify(M(R, 2, {2, 0, 0, 4})).centralizer_order, BigInt(36));
}

TEST(Classify, NonInvertibleHasNoCentralizer) {
  const Ring R("zp2:3");
  const auto r = classify(M(R, 2, {0, 1, 0, 0}));
  EXPECT_EQ(r.kind, MatrixKind::CompatibleCyclic);
  EXPECT_FALSE(r.centralizer_order);
}

TEST(Classify, KindDependsOnReductionAsDefined) {
  std::mt19937_64 rng(30);
  for (const auto& spec : desk_rings()) {
    const Ring R(spec);
    for (int trial = 0; trial < 300; ++trial) {
      const MatO2 A = random_matrix(R, 1 + rng() % 4, rng);
      const MatK Ab = theta(A);
      const PolyK chi = charpoly(Ab);
      const auto rep = classify(A);
      EXPECT_EQ(rep.reduction_charpoly, chi);
      EXPECT_EQ(rep.kind == MatrixKind::RegularSemisimple, is_squarefree_k(chi));
      const bool cyclic = minpoly_k(Ab) == chi;
      EXPECT_EQ(rep.kind != MatrixKind::Other, cyclic);
      EXPECT_EQ(rep.factorization.has_value(),
                rep.kind == MatrixKind::RegularSemisimple || rep.kind == MatrixKind::CompatibleCyclic);
    }
  }
}

TEST(Classify, CanonicalRsExamples) {
  const Ring R("zp2:3");
  const MatO2 C = companion(PolyO2::from_ints(R, {7, -6, 1}));
  const auto c = canonical_rs(C);
  EXPECT_EQ(c.form, C);
  expect_canonical_identity(C, c);
  std::mt19937_64 rng(31);
  const MatO2 D = M(R, 2, {2, 0, 0, 4});
  const MatO2 Df = canonical_rs(D).form;
  EXPECT_TRUE(Df == D || Df == M(R, 2, {4, 0, 0, 2})) << Df.to_text();
  for (int i = 0; i < 10; ++i) {
    const MatO2 A = conjugate(D, rng);
    const auto f = canonical_rs(A);
    EXPECT_EQ(f.form, Df);
    expect_canonical_identity(A, f);
  }
  const MatO2 A = M(R, 2, {3, 1, 5, 0});
  EXPECT_EQ(canonical_rs(A).form, companion(PolyO2::from_ints(R, {-5, -3, 1})));
  EXPECT_THROW(canonical_rs(M(R, 2, {1, 1, 0, 1})), Error);
}

TEST(Classify, CanonicalCcExamples) {
  const Ring R("zp2:3");
  const MatO2 J = jordan_O2(PolyO2::from_ints(R, {-1, 1}), 2);
  EXPECT_EQ(canonical_cc(J).form, J);
  const MatO2 A = M(R, 2, {1, 1, 0, 1});
  const auto c = canonical_cc(A);
  EXPECT_EQ(c.form, J);
  expect_canonical_identity(A, c);
  std::mt19937_64 rng(32);
  const MatO2 J2 = jordan_O2(PolyO2::from_ints(R, {-2, 1}), 2);
  for (int i = 0; i < 10; ++i) {
    const MatO2 B = conjugate(J2, rng);
    EXPECT_EQ(canonical_cc(B).form, J2);
  }
  EXPECT_THROW(canonical_cc(M(R, 2, {0, -1, 1, -1})), Error);
  EXPECT_THROW(canonical_cc(M(R, 2, {5, 0, 0, 2})), Error);
}

// p does not divide r and F is the canonical certified root: form = J exactly.
TEST(Classify, CanonicalRoundTripLargerBlocks) {
  std::mt19937_64 rng(33);
  for (const auto& spec : desk_rings()) {
    const Ring R(spec);
    const Field& k = R.residue_field();
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t r = 1 + rng() % 2;
      const std::size_t d = 1 + rng() % (r == 1 ? 3 : 2);
      const PolyO2 F = random_lift(R, random_irreducible_k(k, d, rng), rng);
      const MatO2 J = jordan_O2(F, r);
      const MatO2 A = conjugate(J, rng);
      const auto c = canonical_cc(A);
      EXPECT_EQ(c.form, J) << spec << " " << F.pretty() << " r=" << r;
      expect_canonical_identity(A, c);
    }
  }
}

TEST(Classify, RsCharpolyIsMinimal) {
  std::mt19937_64 rng(34);
  const Ring R("zp2:3");
  for (int trial = 0; trial < 100; ++trial) {
    const MatO2 A = random_gl(R, 1 + rng() % 3, rng);
    const auto rep = classify(A);
    if (rep.kind != MatrixKind::RegularSemisimple) continue;
    const auto& fac = *rep.factorization;
    EXPECT_TRUE(annihilates(rep.charpoly, A));
    // every proper product of fundamental factors fails
    for (std::uint32_t mask = 0; mask + 1 < (1u << fac.size()); ++mask) {
      PolyO2 G = PolyO2::constant(R, R.one());
      for (std::size_t i = 0; i < fac.size(); ++i)
        if (mask >> i & 1) G *= fac[i].F;
      EXPECT_FALSE(annihilates(G, A));
    }
  }
}

class Gl2Zp2 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    R = new Ring("zp2:3");
    gl = new std::vector<MatO2>(enumerate_gl(*R, 2));
  }
  static void TearDownTestSuite() {
    delete gl;
    delete R;
  }
  static Ring* R;
  static std::vector<MatO2>* gl;
};
Ring* Gl2Zp2::R = nullptr;
std::vector<MatO2>* Gl2Zp2::gl = nullptr;

TEST_F(Gl2Zp2, CentralizerFormulaMatchesBruteForce) {
  const auto cp = conjugacy_classes(*gl);
  std::size_t checked = 0;
  for (std::size_t c = 0; c < cp.rep.size(); ++c) {
    const MatO2& A = cp.elements[cp.rep[c]];
    const auto rep = classify(A);
    if (!rep.factorization) continue;
    const auto od = orbit_and_centralizer(*gl, A);
    EXPECT_EQ(*rep.centralizer_order, BigInt(od.centralizer_size)) << A.to_text();
    EXPECT_EQ(od.orbit_size, cp.class_size[c]);
    ++checked;
  }
  EXPECT_EQ(checked, 42u);
}

TEST_F(Gl2Zp2, CanonicalFormDecidesSimilarity) {
  std::mt19937_64 rng(35);
  std::vector<MatO2> pool;
  for (const auto& A : *gl)
    if (classify(A).factorization) pool.push_back(A);
  int similar = 0;
  for (int pair = 0; pair < 50; ++pair) {
    const MatO2& A = pool[rng() % pool.size()];
    const MatO2 B = pair % 2 ? conjugate(A, rng) : pool[rng() % pool.size()];
    bool brute = false;
    for (const auto& S : *gl)
      if (S * B == A * S) {
        brute = true;
        break;
      }
    EXPECT_EQ(canonical_cc(A).form == canonical_cc(B).form, brute) << A.to_text() << " vs " << B.to_text();
    similar += brute;
  }
  EXPECT_GE(similar, 25);
}
