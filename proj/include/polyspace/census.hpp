#pragma once

#include "polyspace/core.hpp"

namespace polyspace {

/// Counts of short/median subsets containing a maximal link, by cardinality.
/// Slot k counts subsets of cardinality k+1, k = 0..n-3. Subsets of
/// cardinality n-1 and n fall outside the window; they are tallied in the
/// high_* diagnostics (provably zero for positive lengths) so the partition
/// short + median + long = 2^(n-1) can be checked.
struct Census {
  int n = 0;
  int i_max = 0;
  std::vector<BigInt> a;
  std::vector<BigInt> b;
  BigInt high_short = 0;
  BigInt high_median = 0;
  BigInt long_count = 0;

  bool operator==(const Census& o) const = default;
};

/// S_i / M_i: short / median subsets containing the i largest links of the
/// ascending-sorted vector; i ranges over [1, r + 1].
struct PrefixCensus {
  int i = 0;
  int r = 0;  // floor((n - 1) / 2)
  BigInt shorts;
  BigInt medians;
};

struct CensusOptions {
  std::uint64_t max_cells = 1'000'000'000;  // cap on n^2 * total for the DP
};

/// Exact counts by enumeration of all 2^(n-1) subsets containing the maximal
/// link. Refuses n > 30; use census_dp beyond that.
Census census_naive(const LengthVector& l);

/// Same contract as census_naive, via subset-sum dynamic programming over
/// (cardinality, sum) pairs. O(n^2 * total) table cells, exact big-integer
/// counts. Throws budget_error when n^2 * total exceeds opts.max_cells.
Census census_dp(const LengthVector& l, const CensusOptions& opts = {});

/// Exact S_i, M_i for 1 <= i <= floor((n-1)/2) + 1; sorts internally.
PrefixCensus prefix_census(const LengthVector& l, int i);

}  // namespace polyspace
