#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "test_util.hpp"

using namespace o2power;

namespace {

using Q = BigRational;

BigInt binom(const BigInt& n, std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// [y^j] (sum_{s>=1} w(s) y^s)^k by enumerating compositions of j into k parts.
Q composition_sum(std::size_t j, std::size_t k, const std::function<Q(std::size_t)>& w) {
  if (k == 0) return j == 0 ? Q(1) : Q(0);
  Q s = 0;
  for (std::size_t first = 1; first + (k - 1) <= j; ++first) s += w(first) * composition_sum(j - first, k - 1, w);
  return s;
}

// Coefficient of z^n, assembled from per-degree contributions over all
// partitions of n: factor d contributes z^{d j} with weight c(d, j).
Q partition_sum(std::size_t n, std::size_t dmin, const std::function<Q(std::size_t, std::size_t)>& c) {
  if (n == 0) return 1;
  Q s = 0;
  for (std::size_t d = dmin; d <= n; ++d)
    for (std::size_t j = 1; d * j <= n; ++j) s += c(d, j) * partition_sum(n - d * j, d + 1, c);
  return s;
}

Q oracle(SeriesFamily fam, std::uint64_t q, std::optional<std::uint64_t> L, std::size_t n) {
  const std::uint64_t m = q;
  auto E = [&](std::size_t d) { return L ? count_N_O2L(q, m, d, *L) : big_pow(m, d) * count_N(q, d); };
  switch (fam) {
    case SeriesFamily::s:
    case SeriesFamily::sL:
      return partition_sum(n, 1, [&](std::size_t d, std::size_t j) {
        const Q x = Q(1) / Q(big_pow(m, d) * (big_pow(q, d) - 1));
        Q p = 1;
        for (std::size_t i = 0; i < j; ++i) p *= x;
        return Q(binom(E(d), j)) * p;
      });
    case SeriesFamily::r:
    case SeriesFamily::rL:
      return partition_sum(n, 1, [&](std::size_t d, std::size_t j) {
        auto w = [&](std::size_t s) {
          return Q(1) / Q(big_pow(m, d * s) * big_pow(q, (s - 1) * d) * (big_pow(q, d) - 1));
        };
        Q t = 0;
        for (std::size_t k = 1; k <= j; ++k) t += Q(binom(E(d), k)) * composition_sum(j, k, w);
        return t;
      });
    case SeriesFamily::cs:
    case SeriesFamily::csL:
      return partition_sum(n, 1, [&](std::size_t d, std::size_t j) { return Q(binom(E(d), j)); });
    case SeriesFamily::cr:
    case SeriesFamily::crL:
      return partition_sum(n, 1, [&](std::size_t d, std::size_t j) { return Q(binom(E(d) + j - 1, j)); });
  }
  return 0;
}

const SeriesFamily kAll[] = {SeriesFamily::s,  SeriesFamily::sL,  SeriesFamily::r,  SeriesFamily::rL,
                             SeriesFamily::cs, SeriesFamily::csL, SeriesFamily::cr, SeriesFamily::crL};

}  // namespace

TEST(Series, MatchesIndependentExpansion) {
  for (std::uint64_t q : {3u, 5u, 9u})
    for (auto fam : kAll)
      for (std::uint64_t L : {2u, 4u}) {
        const std::optional<std::uint64_t> l = has_L(fam) ? std::optional<std::uint64_t>(L) : std::nullopt;
        const std::size_t N = q == 3 ? 6 : 4;
        const Series s = series(fam, q, q, l, N);
        ASSERT_EQ(s.coefficients.size(), N + 1);
        for (std::size_t n = 0; n <= N; ++n)
          EXPECT_EQ(s.coefficients[n], oracle(fam, q, l, n)) << to_string(fam) << " q=" << q << " L=" << L << " n=" << n;
      }
}

TEST(Series, FrozenValuesAtQ3) {
  auto coeffs = [](SeriesFamily f, std::optional<std::uint64_t> L, std::size_t N) {
    return series(f, 3, 3, L, N).coefficients;
  };
  EXPECT_EQ(coeffs(SeriesFamily::s, {}, 2), (std::vector<Q>{1, 1, Q(19, 24)}));
  EXPECT_EQ(coeffs(SeriesFamily::r, {}, 4), (std::vector<Q>{1, 1, Q(65, 72), Q(7415, 8424), Q(2614709, 3032640)}));
  EXPECT_EQ(coeffs(SeriesFamily::sL, 2, 2), (std::vector<Q>{1, Q(1, 2), Q(5, 24)}));
  EXPECT_EQ(coeffs(SeriesFamily::rL, 2, 2), (std::vector<Q>{1, Q(1, 2), Q(19, 72)}));
  EXPECT_EQ(class_counts(SeriesFamily::cs, 3, 3, {}, 2), (std::vector<BigInt>{1, 6, 42}));
  EXPECT_EQ(class_counts(SeriesFamily::cr, 3, 3, {}, 2), (std::vector<BigInt>{1, 6, 48}));
  EXPECT_EQ(class_counts(SeriesFamily::csL, 3, 3, 2, 2), (std::vector<BigInt>{1, 3, 12}));
  EXPECT_EQ(class_counts(SeriesFamily::crL, 3, 3, 2, 2), (std::vector<BigInt>{1, 3, 15}));
}

// n = 1: every unit is regular semisimple; L-th powers of units are counted directly.
TEST(Series, DegreeOneAgreesWithUnits) {
  for (const char* spec : {"zp2:3", "zp2:5", "fqu2:3:1"}) {
    const Ring R(spec);
    const auto units = R.units();
    EXPECT_EQ(series(SeriesFamily::s, R.q(), R.mabs(), {}, 1).coefficients[1], 1);
    EXPECT_EQ(series(SeriesFamily::r, R.q(), R.mabs(), {}, 1).coefficients[1], 1);
    EXPECT_EQ(class_counts(SeriesFamily::cs, R.q(), R.mabs(), {}, 1)[1], BigInt(units.size()));
    for (std::uint64_t L : {2u, 4u}) {
      std::set<std::uint32_t> img;
      for (auto u : units) img.insert(R.pow(u, L).v);
      EXPECT_EQ(series(SeriesFamily::sL, R.q(), R.mabs(), L, 1).coefficients[1], Q(img.size(), units.size()));
      EXPECT_EQ(class_counts(SeriesFamily::csL, R.q(), R.mabs(), L, 1)[1], BigInt(img.size()));
    }
  }
}

TEST(Series, ProbabilitiesInUnitInterval) {
  for (auto fam : {SeriesFamily::s, SeriesFamily::sL, SeriesFamily::r, SeriesFamily::rL})
    for (std::uint64_t q : {3u, 5u, 7u}) {
      const auto s = series(fam, q, q, 2, 10);
      EXPECT_EQ(s.coefficients[0], 1);
      for (const auto& c : s.coefficients) {
        EXPECT_GE(c, 0);
        EXPECT_LE(c, 1);
      }
    }
}

TEST(Series, BadParams) {
  EXPECT_THROW(series(SeriesFamily::s, 4, 4, {}, 3), Error);
  EXPECT_THROW(series(SeriesFamily::s, 6, 6, {}, 3), Error);
  EXPECT_THROW(series(SeriesFamily::s, 3, 9, {}, 3), Error);
  EXPECT_THROW(series(SeriesFamily::sL, 3, 3, {}, 3), Error);
  EXPECT_THROW(series(SeriesFamily::sL, 3, 3, 3, 3), Error);
  EXPECT_THROW(series(SeriesFamily::s, 3, 3, {}, 65), Error);
  EXPECT_THROW(class_counts(SeriesFamily::s, 3, 3, {}, 3), Error);
  EXPECT_EQ(parse_family("crL"), SeriesFamily::crL);
  EXPECT_THROW(parse_family("x"), Error);
}
