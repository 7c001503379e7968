#include <doctest.h>

#include <cstdlib>

#include "polyspace/betti.hpp"
#include "polyspace/census.hpp"
#include "test_util.hpp"

using namespace polyspace;

namespace {

void check_against_oracle(const LengthVector& l, const Census& c) {
  const testutil::OracleCensus oracle = testutil::oracle_census(l);
  CHECK(c.i_max == testutil::oracle_max_index(l));
  CHECK(c.a == oracle.a);
  CHECK(c.b == oracle.b);
  CHECK(c.high_short == oracle.high_short);
  CHECK(c.high_median == oracle.high_median);
  CHECK(c.long_count == oracle.long_count);
}

}  // namespace

TEST_CASE("census_naive reproduces the worked pentagon counts") {
  const Census c = census_naive(LengthVector{3, 2, 2, 1, 1});
  CHECK(c.i_max == 1);
  CHECK(c.a == std::vector<BigInt>{1, 2, 0});
  CHECK(c.b == std::vector<BigInt>{0, 0, 0});
  CHECK(c.high_short == 0);
  CHECK(c.high_median == 0);
}

TEST_CASE("census_naive on equilateral vectors") {
  const Census odd = census_naive(LengthVector::equilateral(5));
  CHECK(odd.a == std::vector<BigInt>{1, 4, 0});
  CHECK(odd.b == std::vector<BigInt>{0, 0, 0});

  const Census even = census_naive(LengthVector::equilateral(4));
  CHECK(even.a == std::vector<BigInt>{1, 0});
  CHECK(even.b == std::vector<BigInt>{0, 3});
}

TEST_CASE("census_dp matches the same examples") {
  CHECK(census_dp(LengthVector{3, 2, 2, 1, 1}) == census_naive(LengthVector{3, 2, 2, 1, 1}));
  const Census seven = census_dp(LengthVector::equilateral(7));
  CHECK(seven.a == std::vector<BigInt>{1, 6, 15, 0, 0});
  CHECK(seven.b == std::vector<BigInt>{0, 0, 0, 0, 0});
}

TEST_CASE("both backends agree with the direct-enumeration oracle") {
  auto gen = testutil::rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testutil::random_n(gen, 3, 12);
    const LengthVector l = testutil::random_vector(gen, n, 50);
    check_against_oracle(l, census_naive(l));
    check_against_oracle(l, census_dp(l));
  }
}

TEST_CASE("backend equivalence on random vectors") {
  auto gen = testutil::rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = testutil::random_n(gen, 3, 20);
    const LengthVector l = testutil::random_vector(gen, n, 50);
    CHECK(census_dp(l) == census_naive(l));
  }
}

TEST_CASE("partition of the subsets containing the maximal link") {
  auto gen = testutil::rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = testutil::random_n(gen, 3, 12);
    const LengthVector l = testutil::random_vector(gen, n, 30);
    const Census c = census_naive(l);
    BigInt sum = c.high_short + c.high_median + c.long_count;
    for (const BigInt& v : c.a) sum += v;
    for (const BigInt& v : c.b) sum += v;
    CHECK(sum == (BigInt(1) << (n - 1)));
    // Cardinalities n-1 and n are never short or median for positive lengths.
    CHECK(c.high_short == 0);
    CHECK(c.high_median == 0);
  }
}

TEST_CASE("census is invariant under permutation of the lengths") {
  auto gen = testutil::rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = testutil::random_n(gen, 3, 10);
    const LengthVector l = testutil::random_vector(gen, n, 20);
    std::vector<BigInt> shuffled = l.lengths();
    for (std::size_t i = shuffled.size(); i > 1; --i)
      std::swap(shuffled[i - 1], shuffled[gen() % i]);
    const Census c1 = census_naive(l);
    const Census c2 = census_naive(LengthVector(std::move(shuffled)));
    CHECK(c1.a == c2.a);
    CHECK(c1.b == c2.b);
    CHECK(c1.long_count == c2.long_count);
  }
}

TEST_CASE("census_naive falls back to big-integer sums for huge lengths") {
  const BigInt big = BigInt(1) << 70;
  const LengthVector l(std::vector<BigInt>{big, big, big + 1, 1});
  check_against_oracle(l, census_naive(l));
}

TEST_CASE("census enumeration is independent of the worker count") {
  auto gen = testutil::rng(26);
  const LengthVector l = testutil::random_vector(gen, 16, 50);
  const Census base = census_naive(l);
  setenv("POLYSPACE_THREADS", "5", 1);
  CHECK(census_naive(l) == base);
  unsetenv("POLYSPACE_THREADS");
}

TEST_CASE("enumeration budget and cell budget errors") {
  CHECK_THROWS_AS(census_naive(LengthVector::equilateral(31)), budget_error);
  CHECK_THROWS_WITH_AS(census_naive(LengthVector::equilateral(31)),
                       doctest::Contains("use census_dp"), budget_error);
  CHECK_THROWS_AS(census_dp(LengthVector{100, 100, 100}, CensusOptions{100}), budget_error);
  const BigInt big = BigInt(1) << 70;
  CHECK_THROWS_AS(census_dp(LengthVector(std::vector<BigInt>{big, big, big})), budget_error);
}

TEST_CASE("census_dp when the maximal link dominates everything") {
  // rhs < 0: every subset containing the long link is long.
  const Census c = census_dp(LengthVector{1, 1, 1, 9});
  CHECK(c.a == std::vector<BigInt>{0, 0});
  CHECK(c.b == std::vector<BigInt>{0, 0});
  CHECK(c.long_count == 8);
  CHECK(c == census_naive(LengthVector{1, 1, 1, 9}));
}

TEST_CASE("census_dp big-integer cells beyond 63 links") {
  // n = 65 (odd, r = 32): shorts containing the last link have |K| <= 31.
  const Census c = census_dp(LengthVector::equilateral(65));
  for (int k = 0; k <= 62; ++k) {
    CHECK(c.a[static_cast<std::size_t>(k)] == (k <= 31 ? binomial(64, k) : BigInt(0)));
    CHECK(c.b[static_cast<std::size_t>(k)] == 0);
  }
  BigInt shorts = 0;
  for (const BigInt& v : c.a) shorts += v;
  CHECK(c.long_count == (BigInt(1) << 64) - shorts);
}

TEST_CASE("prefix census big-integer path beyond 63 remaining links") {
  // Equilateral n = 70 (even, r = 34): shorts containing the top link have
  // up to 33 further links; medians exactly 34.
  const PrefixCensus pc = prefix_census(LengthVector::equilateral(70), 1);
  BigInt expect_short = 0;
  for (int k = 0; k <= 33; ++k) expect_short += binomial(69, k);
  CHECK(pc.shorts == expect_short);
  CHECK(pc.medians == binomial(69, 34));
}

TEST_CASE("census_dp equilateral closed forms at n = 40") {
  // n = 2r + 2 with r = 19: a_k = C(39, k) for k <= 18, medians only at
  // cardinality 20.
  const Census c = census_dp(LengthVector::equilateral(40));
  for (int k = 0; k <= 37; ++k) {
    CHECK(c.a[static_cast<std::size_t>(k)] == (k <= 18 ? binomial(39, k) : BigInt(0)));
    CHECK(c.b[static_cast<std::size_t>(k)] == (k == 19 ? binomial(39, 19) : BigInt(0)));
  }
}

TEST_CASE("prefix census on known equilateral values") {
  const PrefixCensus p1 = prefix_census(LengthVector::equilateral(5), 1);
  CHECK(p1.shorts == 5);
  CHECK(p1.medians == 0);
  CHECK(p1.r == 2);

  const PrefixCensus p3 = prefix_census(LengthVector::equilateral(5), 3);
  CHECK(p3.shorts == 0);
  CHECK(p3.medians == 0);

  const PrefixCensus p2 = prefix_census(LengthVector::equilateral(4), 2);
  CHECK(p2.shorts == 0);
  CHECK(p2.medians == 1);
}

TEST_CASE("prefix census rejects out-of-range i") {
  CHECK_THROWS_AS(prefix_census(LengthVector::equilateral(5), 0), input_error);
  CHECK_THROWS_AS(prefix_census(LengthVector::equilateral(5), 4), input_error);
}

TEST_CASE("prefix census agrees with direct enumeration") {
  auto gen = testutil::rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testutil::random_n(gen, 3, 12);
    const LengthVector l = testutil::random_vector(gen, n, 30);
    const LengthVector s = l.sorted();
    const int r = (n - 1) / 2;
    for (int i = 1; i <= r + 1; ++i) {
      BigInt shorts = 0, medians = 0;
      std::uint64_t prefix = 0;
      for (int j = n - i + 1; j <= n; ++j) prefix |= std::uint64_t{1} << (j - 1);
      for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (n - i)); ++rest) {
        const int cls = testutil::oracle_class(s, prefix | rest);
        if (cls < 0) shorts += 1;
        if (cls == 0) medians += 1;
      }
      const PrefixCensus pc = prefix_census(l, i);
      CHECK(pc.shorts == shorts);
      CHECK(pc.medians == medians);
    }
  }
}

TEST_CASE("prefix census DP path matches enumeration near the switchover") {
  // n - i = 25 exercises the sum-DP branch; equilateral values are known.
  const LengthVector l = LengthVector::equilateral(26);
  const PrefixCensus via_dp = prefix_census(l, 1);
  // Shorts containing {26}: subsets of the other 25 of cardinality <= 11.
  BigInt expect_short = 0;
  for (int k = 0; k <= 11; ++k) expect_short += binomial(25, k);
  CHECK(via_dp.shorts == expect_short);
  CHECK(via_dp.medians == binomial(25, 12));
}
