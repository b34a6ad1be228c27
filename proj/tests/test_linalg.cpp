#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace o2power;
using namespace o2test;

namespace {

MatK Mk(const Field& k, std::size_t n, std::initializer_list<std::int64_t> xs) { return MatK::from_ints(k, n, xs); }

// Smallest monic annihilator by trying every monic polynomial in degree order.
PolyK brute_minpoly(const MatK& A) {
  const Field& k = A.ring();
  for (std::size_t d = 0; d <= A.n(); ++d) {
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
      const PolyK f(k, c);
      if (annihilates(f, A)) return f;
    }
  }
  return PolyK(k);
}

}  // namespace

TEST(Linalg, MinpolyExamples) {
  const Field k(3);
  EXPECT_EQ(minpoly_k(Mk(k, 2, {1, 1, 0, 1})), PolyK::from_ints(k, {1, -2, 1}));
  EXPECT_EQ(minpoly_k(MatK::identity(k, 2)), PolyK::from_ints(k, {-1, 1}));
  EXPECT_EQ(minpoly_k(Mk(k, 2, {0, 1, 2, 0})), PolyK::from_ints(k, {1, 0, 1}));
}

TEST(Linalg, MinpolyMatchesBruteForce) {
  std::mt19937_64 rng(20);
  const Field k(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<KElem> e(n * n);
    for (auto& x : e) x = random_k(k, rng);
    // bias towards repeated eigenvalues
    if (trial % 4 == 0)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e[i * n + j] = i == j ? k.one() : (j == i + 1 ? e[i * n + j] : k.zero());
    const MatK A(k, n, e);
    EXPECT_EQ(minpoly_k(A), brute_minpoly(A)) << A.to_text();
  }
}

TEST(Linalg, RcfExamples) {
  const Field k(3);
  const PolyK f = PolyK::from_ints(k, {1, 2, 0, 1});
  const auto c = rcf_conjugator_k(companion(f));
  EXPECT_EQ(c.S, MatK::identity(k, 3));
  EXPECT_EQ(c.blocks, std::vector<PolyK>{f});
  const auto d = rcf_conjugator_k(Mk(k, 2, {0, 2, 1, 0}));
  EXPECT_EQ(d.blocks, std::vector<PolyK>{PolyK::from_ints(k, {1, 0, 1})});
  const auto s = rcf_conjugator_k(MatK::scalar(k, 2, k.from_int(2)));
  EXPECT_EQ(s.blocks, (std::vector<PolyK>{PolyK::from_ints(k, {-2, 1}), PolyK::from_ints(k, {-2, 1})}));
  EXPECT_EQ(s.S, MatK::identity(k, 2));
}

TEST(Linalg, RcfRandomConjugates) {
  std::mt19937_64 rng(21);
  for (auto k : {Field(3), Field(5), Field(3, 2, {1, 0, 1})}) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<KElem> e(n * n);
      for (auto& x : e) x = random_k(k, rng);
      const MatK A(k, n, e);
      const auto r = rcf_conjugator_k(A);
      EXPECT_TRUE(is_gl(r.S));
      EXPECT_EQ(inverse(r.S) * A * r.S, r.form);
      for (std::size_t i = 1; i < r.blocks.size(); ++i) EXPECT_TRUE(mod(r.blocks[i], r.blocks[i - 1]).is_zero());
      EXPECT_EQ(r.blocks.back(), minpoly_k(A));
      // similar matrices share the form
      const MatK P = random_gl_k(k, n, rng);
      EXPECT_EQ(rcf_conjugator_k(P * A * inverse(P)).form, r.form);
    }
  }
}

TEST(Linalg, CyclicVectorExamples) {
  const Ring R("zp2:3");
  const PolyO2 F = PolyO2::from_ints(R, {4, 3, 0, 1});
  EXPECT_EQ(cyclic_vector(companion(F)), (VecO2{R.one(), R.zero(), R.zero()}));
  EXPECT_EQ(cyclic_vector(MatO2::from_ints(R, 2, {1, 1, 0, 1})), (VecO2{R.zero(), R.one()}));
  const MatO2 A = MatO2::from_ints(R, 2, {0, -1, 1, -1});
  EXPECT_TRUE(is_gl(krylov_matrix(A, cyclic_vector(A))));
  EXPECT_THROW(cyclic_vector(MatO2::identity(R, 2)), Error);
}

TEST(Linalg, KrylovBasisGivesCompanion) {
  std::mt19937_64 rng(22);
  for (const auto& spec : desk_rings()) {
    const Ring R(spec);
    for (int trial = 0; trial < 100; ++trial) {
      const MatO2 A = random_matrix(R, 1 + rng() % 4, rng);
      if (!is_cyclic_k(theta(A))) continue;
      const MatO2 K = krylov_matrix(A, cyclic_vector(A));
      EXPECT_TRUE(is_gl(K));
      EXPECT_EQ(inverse(K) * A * K, companion(charpoly(A)));
    }
  }
}

TEST(Linalg, SolveAndNullspace) {
  std::mt19937_64 rng(23);
  const Field k(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    RowsK M(rows, VecK(cols));
    for (auto& r : M)
      for (auto& x : r) x = random_k(k, rng);
    for (const auto& v : nullspace_k(k, M, cols))
      for (const auto& r : M) {
        KElem s = k.zero();
        for (std::size_t j = 0; j < cols; ++j) s = k.add(s, k.mul(r[j], v[j]));
        EXPECT_EQ(s, k.zero());
      }
    EXPECT_EQ(nullspace_k(k, M, cols).size() + rank_k(k, M, cols), cols);
    VecK x(cols);
    for (auto& e : x) e = random_k(k, rng);
    VecK b(rows, k.zero());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) b[i] = k.add(b[i], k.mul(M[i][j], x[j]));
    const auto sol = solve_k(k, M, cols, b);
    ASSERT_TRUE(sol);
    for (std::size_t i = 0; i < rows; ++i) {
      KElem s = k.zero();
      for (std::size_t j = 0; j < cols; ++j) s = k.add(s, k.mul(M[i][j], (*sol)[j]));
      EXPECT_EQ(s, b[i]);
    }
  }
}
