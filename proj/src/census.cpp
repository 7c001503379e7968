#include "polyspace/census.hpp"

#include <algorithm>
#include <mutex>

#include "polyspace/parallel.hpp"

namespace polyspace {

namespace {

// Per-worker tallies indexed by the cardinality of the enumerated subset K
// (the counted subset is K plus one fixed link, so |J| = |K| + 1).
struct Tallies {
  std::vector<std::uint64_t> shorts;
  std::vector<std::uint64_t> medians;
  std::uint64_t longs = 0;

  explicit Tallies(int slots) : shorts(slots, 0), medians(slots, 0) {}

  void merge(const Tallies& o) {
    for (std::size_t k = 0; k < shorts.size(); ++k) {
      shorts[k] += o.shorts[k];
      medians[k] += o.medians[k];
    }
    longs += o.longs;
  }
};

bool doubled_total_fits_i64(const BigInt& total) {
  return 2 * total <= BigInt("4611686018854775807");  // 2^62 - 1, headroom kept
}

// Enumerates all subsets K of `items` in Gray-code order and tallies the
// comparison of 2*sum(K) against rhs_doubled into (short, median, long) by
// |K|. Chunked across workers; the merge is a commutative sum, so the result
// is identical for any worker count.
Tallies enumerate_tallies_u64(const std::vector<std::int64_t>& items, std::int64_t rhs_doubled) {
  const int m = static_cast<int>(items.size());
  Tallies result(m + 1);
  std::mutex merge_mutex;
  parallel_chunks(0, std::uint64_t{1} << m, [&](int, std::uint64_t lo, std::uint64_t hi) {
    Tallies local(m + 1);
    std::uint64_t gray = lo ^ (lo >> 1);
    std::int64_t sum = 0;
    int card = 0;
    for (std::uint64_t b = gray; b; b &= b - 1) {
      sum += items[static_cast<std::size_t>(std::countr_zero(b))];
      ++card;
    }
    for (std::uint64_t t = lo; t < hi; ++t) {
      const std::int64_t doubled = 2 * sum;
      if (doubled < rhs_doubled) ++local.shorts[card];
      else if (doubled == rhs_doubled) ++local.medians[card];
      else ++local.longs;
      if (t + 1 < hi) {
        const int bit = std::countr_zero(t + 1);
        gray ^= std::uint64_t{1} << bit;
        if ((gray >> bit) & 1u) { sum += items[bit]; ++card; }
        else { sum -= items[bit]; --card; }
      }
    }
    std::scoped_lock lock(merge_mutex);
    result.merge(local);
  });
  return result;
}

// Arbitrary-precision fallback for lengths too large for the int64 path.
Tallies enumerate_tallies_big(const std::vector<BigInt>& items, const BigInt& rhs_doubled) {
  const int m = static_cast<int>(items.size());
  Tallies result(m + 1);
  std::mutex merge_mutex;
  parallel_chunks(0, std::uint64_t{1} << m, [&](int, std::uint64_t lo, std::uint64_t hi) {
    Tallies local(m + 1);
    std::uint64_t gray = lo ^ (lo >> 1);
    BigInt sum = 0;
    int card = 0;
    for (std::uint64_t b = gray; b; b &= b - 1) {
      sum += items[static_cast<std::size_t>(std::countr_zero(b))];
      ++card;
    }
    for (std::uint64_t t = lo; t < hi; ++t) {
      const int c = cmp(2 * sum, rhs_doubled);
      if (c < 0) ++local.shorts[card];
      else if (c == 0) ++local.medians[card];
      else ++local.longs;
      if (t + 1 < hi) {
        const int bit = std::countr_zero(t + 1);
        gray ^= std::uint64_t{1} << bit;
        if ((gray >> bit) & 1u) { sum += items[bit]; ++card; }
        else { sum -= items[bit]; --card; }
      }
    }
    std::scoped_lock lock(merge_mutex);
    result.merge(local);
  });
  return result;
}

Census census_from_tallies(const LengthVector& l, int i_max, const Tallies& t) {
  const int n = l.n();
  Census c;
  c.n = n;
  c.i_max = i_max;
  c.a.assign(static_cast<std::size_t>(n - 2), BigInt(0));
  c.b.assign(static_cast<std::size_t>(n - 2), BigInt(0));
  for (int k = 0; k <= n - 3; ++k) {
    c.a[static_cast<std::size_t>(k)] = t.shorts[static_cast<std::size_t>(k)];
    c.b[static_cast<std::size_t>(k)] = t.medians[static_cast<std::size_t>(k)];
  }
  for (int k = n - 2; k <= n - 1; ++k) {
    c.high_short += t.shorts[static_cast<std::size_t>(k)];
    c.high_median += t.medians[static_cast<std::size_t>(k)];
  }
  c.long_count = t.longs;
  return c;
}

}  // namespace

Census census_naive(const LengthVector& l) {
  const int n = l.n();
  if (n > 30)
    throw budget_error("census_naive: n = " + std::to_string(n) +
                       " exceeds the enumeration budget (30); use census_dp");
  const int i_max = max_index(l);

  // Subsets J containing i_max correspond to subsets K of the remaining
  // links; J is short iff 2*sum(K) < total - 2*l_imax.
  if (doubled_total_fits_i64(l.total())) {
    std::vector<std::int64_t> items;
    items.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i)
      if (i != i_max) items.push_back(static_cast<std::int64_t>(l.length(i).get_si()));
    const std::int64_t rhs =
        static_cast<std::int64_t>(l.total().get_si()) - 2 * static_cast<std::int64_t>(l.length(i_max).get_si());
    return census_from_tallies(l, i_max, enumerate_tallies_u64(items, rhs));
  }
  std::vector<BigInt> items;
  items.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n; ++i)
    if (i != i_max) items.push_back(l.length(i));
  const BigInt rhs = l.total() - 2 * l.length(i_max);
  return census_from_tallies(l, i_max, enumerate_tallies_big(items, rhs));
}

namespace {

// Shared DP core: count[c][s] = number of subsets of `items` with cardinality
// c and sum s, for s <= s_max only. Sums never shrink, so truncating the
// columns at s_max is exact for every query below it. Cell counts are bounded
// by 2^(#items), which lets short vectors use plain 64-bit cells.
template <typename Cell>
std::vector<Cell> subset_count_table(const std::vector<std::uint64_t>& items, int rows,
                                     std::uint64_t s_max) {
  const std::size_t cols = static_cast<std::size_t>(s_max) + 1;
  std::vector<Cell> count(static_cast<std::size_t>(rows) * cols);
  count[0] = 1;
  for (std::size_t m = 1; m <= items.size(); ++m) {
    const std::uint64_t w = items[m - 1];
    if (w > s_max) continue;
    const int card_hi = static_cast<int>(std::min<std::size_t>(m, static_cast<std::size_t>(rows) - 1));
    for (int c = card_hi; c >= 1; --c) {
      Cell* dst = count.data() + static_cast<std::size_t>(c) * cols;
      const Cell* src = count.data() + static_cast<std::size_t>(c - 1) * cols;
      for (std::uint64_t s = s_max; s >= w; --s) {
        if (src[s - w] != 0) dst[s] += src[s - w];
        if (s == w) break;
      }
    }
  }
  return count;
}

}  // namespace

Census census_dp(const LengthVector& l, const CensusOptions& opts) {
  const int n = l.n();
  const int i_max = max_index(l);
  const BigInt cells = BigInt(n) * BigInt(n) * l.total();
  if (cells > BigInt(opts.max_cells))
    throw budget_error("census_dp: n^2 * total = " + cells.get_str() +
                       " cells exceeds the budget of " + std::to_string(opts.max_cells));

  Census result;
  result.n = n;
  result.i_max = i_max;
  result.a.assign(static_cast<std::size_t>(n - 2), BigInt(0));
  result.b.assign(static_cast<std::size_t>(n - 2), BigInt(0));
  result.long_count = BigInt(1) << (n - 1);

  // A subset J containing i_max is short iff 2*sum(J \ {i_max}) < rhs and
  // median iff equal; sums above rhs/2 are all long and are recovered by
  // subtraction from 2^(n-1) at the end.
  const std::int64_t rhs = static_cast<std::int64_t>(l.total().get_ui()) -
                           2 * static_cast<std::int64_t>(l.length(i_max).get_ui());
  if (rhs < 0) return result;  // every subset containing i_max is long

  std::vector<std::uint64_t> items;
  items.reserve(static_cast<std::size_t>(n - 1));
  std::uint64_t total_rest = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == i_max) continue;
    items.push_back(l.length(i).get_ui());
    total_rest += items.back();
  }
  const std::uint64_t s_max = std::min(total_rest, static_cast<std::uint64_t>(rhs) / 2);
  if (BigInt(n) * (BigInt(s_max) + 1) > BigInt(200'000'000))
    throw budget_error("census_dp: the (cardinality, sum) table would exceed the memory budget");

  const auto tally = [&](auto&& cell_at) {
    for (int c = 0; c <= n - 1; ++c) {
      for (std::uint64_t s = 0; s <= s_max; ++s) {
        const BigInt cnt = cell_at(c, s);
        if (cnt == 0) continue;
        const bool median = 2 * static_cast<std::int64_t>(s) == rhs;
        if (c <= n - 3) {
          if (median) result.b[static_cast<std::size_t>(c)] += cnt;
          else result.a[static_cast<std::size_t>(c)] += cnt;
        } else {
          if (median) result.high_median += cnt;
          else result.high_short += cnt;
        }
        result.long_count -= cnt;
      }
    }
  };
  const std::size_t cols = static_cast<std::size_t>(s_max) + 1;
  if (n <= 63) {  // cell counts are at most 2^(n-1)
    const auto table = subset_count_table<std::uint64_t>(items, n, s_max);
    tally([&](int c, std::uint64_t s) { return BigInt(static_cast<unsigned long>(
        table[static_cast<std::size_t>(c) * cols + s])); });
  } else {
    const auto table = subset_count_table<BigInt>(items, n, s_max);
    tally([&](int c, std::uint64_t s) { return table[static_cast<std::size_t>(c) * cols + s]; });
  }
  return result;
}

PrefixCensus prefix_census(const LengthVector& l, int i) {
  const int n = l.n();
  const int r = (n - 1) / 2;
  if (i < 1 || i > r + 1)
    throw input_error("prefix_census: i = " + std::to_string(i) +
                      " out of range [1, " + std::to_string(r + 1) + "]");
  const LengthVector sorted = l.sorted();
  BigInt prefix_sum = 0;
  for (int j = n - i + 1; j <= n; ++j) prefix_sum += sorted.length(j);
  const BigInt rhs_doubled = sorted.total() - 2 * prefix_sum;
  const int m = n - i;

  PrefixCensus out;
  out.i = i;
  out.r = r;
  if (m <= 24) {
    if (doubled_total_fits_i64(sorted.total())) {
      std::vector<std::int64_t> items;
      for (int j = 1; j <= m; ++j) items.push_back(static_cast<std::int64_t>(sorted.length(j).get_si()));
      Tallies t = enumerate_tallies_u64(items, static_cast<std::int64_t>(rhs_doubled.get_si()));
      for (std::uint64_t v : t.shorts) out.shorts += v;
      for (std::uint64_t v : t.medians) out.medians += v;
    } else {
      std::vector<BigInt> items;
      for (int j = 1; j <= m; ++j) items.push_back(sorted.length(j));
      Tallies t = enumerate_tallies_big(items, rhs_doubled);
      for (std::uint64_t v : t.shorts) out.shorts += v;
      for (std::uint64_t v : t.medians) out.medians += v;
    }
    return out;
  }

  // Wide vectors: count by sum only. Sums past rhs/2 are long and never
  // queried, so the row is truncated there.
  const BigInt cells = BigInt(m) * sorted.total();
  if (cells > BigInt(CensusOptions{}.max_cells) || !doubled_total_fits_i64(sorted.total()))
    throw budget_error("prefix_census: subset-sum table exceeds the budget");
  const std::int64_t rhs = rhs_doubled.get_si();
  if (rhs < 0) return out;  // the prefix alone is already long
  std::uint64_t rest_total = 0;
  std::vector<std::uint64_t> items;
  for (int j = 1; j <= m; ++j) {
    items.push_back(sorted.length(j).get_ui());
    rest_total += items.back();
  }
  const std::uint64_t s_max = std::min(rest_total, static_cast<std::uint64_t>(rhs) / 2);
  if (s_max + 1 > 200'000'000)
    throw budget_error("prefix_census: the sum table would exceed the memory budget");

  const auto tally_sums = [&](const auto& count) {
    for (std::uint64_t s = 0; s <= s_max; ++s) {
      if (count[s] == 0) continue;
      if (2 * static_cast<std::int64_t>(s) == rhs) out.medians += count[s];
      else out.shorts += count[s];
    }
  };
  if (m <= 63) {  // sum counts are at most 2^m
    std::vector<std::uint64_t> count(static_cast<std::size_t>(s_max) + 1);
    count[0] = 1;
    for (std::uint64_t w : items) {
      if (w > s_max) continue;
      for (std::uint64_t s = s_max; s >= w; --s) {
        if (count[s - w] != 0) count[s] += count[s - w];
        if (s == w) break;
      }
    }
    tally_sums(count);
  } else {
    std::vector<BigInt> count(static_cast<std::size_t>(s_max) + 1);
    count[0] = 1;
    for (std::uint64_t w : items) {
      if (w > s_max) continue;
      for (std::uint64_t s = s_max; s >= w; --s) {
        if (count[s - w] != 0) count[s] += count[s - w];
        if (s == w) break;
      }
    }
    tally_sums(count);
  }
  return out;
}

}  // namespace polyspace
