#include "polyspace/morse.hpp"

#include <algorithm>
#include <tuple>

#include "polyspace/parallel.hpp"

namespace polyspace {

namespace {

constexpr int kEnumerationLimit = 25;

void check_enumeration_budget(const LengthVector& l, const char* who) {
  if (l.n() > kEnumerationLimit)
    throw budget_error(std::string(who) + ": n = " + std::to_string(l.n()) +
                       " exceeds the enumeration budget (" + std::to_string(kEnumerationLimit) + ")");
}

// Walks all 2^n subsets in Gray-code order, reporting (mask, comparison of
// the subset sum against the complement sum, excess = sum(J) - sum(CJ)) to
// the visitor. Workers get disjoint rank ranges; visitors must reduce
// commutatively.
template <typename Visit>
void for_each_subset(const LengthVector& l, const Visit& visit) {
  const int n = l.n();
  const bool fits = 2 * l.total() <= BigInt("4611686018854775807");
  parallel_chunks(0, std::uint64_t{1} << n, [&](int worker, std::uint64_t lo, std::uint64_t hi) {
    BigInt excess;
    if (fits) {
      std::vector<std::int64_t> len(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) len[static_cast<std::size_t>(i - 1)] = l.length(i).get_si();
      const std::int64_t total = l.total().get_si();
      std::uint64_t gray = lo ^ (lo >> 1);
      std::int64_t sum = 0;
      for (std::uint64_t b = gray; b; b &= b - 1) sum += len[static_cast<std::size_t>(std::countr_zero(b))];
      for (std::uint64_t t = lo; t < hi; ++t) {
        const std::int64_t signed_excess = 2 * sum - total;
        const int c = signed_excess < 0 ? -1 : (signed_excess == 0 ? 0 : 1);
        excess = signed_excess;
        visit(worker, SubsetMask(gray), c, excess);
        if (t + 1 < hi) {
          const int bit = std::countr_zero(t + 1);
          gray ^= std::uint64_t{1} << bit;
          if ((gray >> bit) & 1u) sum += len[static_cast<std::size_t>(bit)];
          else sum -= len[static_cast<std::size_t>(bit)];
        }
      }
    } else {
      std::uint64_t gray = lo ^ (lo >> 1);
      BigInt sum = l.subset_sum(SubsetMask(gray));
      for (std::uint64_t t = lo; t < hi; ++t) {
        excess = 2 * sum - l.total();
        visit(worker, SubsetMask(gray), static_cast<int>(sgn(excess)), excess);
        if (t + 1 < hi) {
          const int bit = std::countr_zero(t + 1);
          gray ^= std::uint64_t{1} << bit;
          if ((gray >> bit) & 1u) sum += l.length(bit + 1);
          else sum -= l.length(bit + 1);
        }
      }
    }
  });
}

}  // namespace

std::vector<CriticalPoint> critical_points(const LengthVector& l) {
  check_enumeration_budget(l, "critical_points");
  const int n = l.n();
  std::vector<std::vector<CriticalPoint>> per_worker(static_cast<std::size_t>(worker_count()));
  for_each_subset(l, [&](int worker, SubsetMask J, int c, const BigInt& excess) {
    if (c <= 0) return;  // only long subsets are critical below zero
    CriticalPoint p;
    p.J = J;
    p.index = n - J.cardinality();
    p.value = -(excess * excess);  // excess = L_J for long J
    per_worker[static_cast<std::size_t>(worker)].push_back(std::move(p));
  });
  std::vector<CriticalPoint> out;
  for (auto& chunk : per_worker)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
  std::sort(out.begin(), out.end(), [](const CriticalPoint& x, const CriticalPoint& y) {
    return std::tie(x.index, x.J.bits) < std::tie(y.index, y.J.bits);
  });
  return out;
}

DecompositionRanks decomposition(const LengthVector& l) {
  check_enumeration_budget(l, "decomposition");
  const int n = l.n();
  const int i_max = max_index(l);

  struct Local {
    std::vector<std::uint64_t> A, B, C, D;
  };
  std::vector<Local> locals(static_cast<std::size_t>(worker_count()));
  for (Local& loc : locals) {
    loc.A.assign(static_cast<std::size_t>(n), 0);
    loc.B.assign(static_cast<std::size_t>(n), 0);
    loc.C.assign(static_cast<std::size_t>(n), 0);
    loc.D.assign(static_cast<std::size_t>(n), 0);
  }
  for_each_subset(l, [&](int worker, SubsetMask J, int c, const BigInt&) {
    if (J.empty()) return;  // grading window is 0..n-1
    Local& loc = locals[static_cast<std::size_t>(worker)];
    const std::size_t grading = static_cast<std::size_t>(n - J.cardinality());
    const bool has_max = J.contains(i_max);
    if (c > 0) {
      if (has_max) ++loc.A[grading];
      else ++loc.B[grading];
    } else if (has_max) {
      if (c < 0) ++loc.C[grading];
      else ++loc.D[grading];
    }
  });

  DecompositionRanks out;
  out.n = n;
  out.i_max = i_max;
  out.A.assign(static_cast<std::size_t>(n), 0);
  out.B.assign(static_cast<std::size_t>(n), 0);
  out.C.assign(static_cast<std::size_t>(n), 0);
  out.D.assign(static_cast<std::size_t>(n), 0);
  for (const Local& loc : locals)
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      out.A[i] += loc.A[i];
      out.B[i] += loc.B[i];
      out.C[i] += loc.C[i];
      out.D[i] += loc.D[i];
    }
  return out;
}

WaHomology wa_homology(const LengthVector& l) {
  const DecompositionRanks d = decomposition(l);
  WaHomology out;
  out.n = d.n;
  out.ranks.resize(static_cast<std::size_t>(d.n));
  for (std::size_t i = 0; i < out.ranks.size(); ++i) out.ranks[i] = d.A[i] + d.B[i];
  return out;
}

BettiVector betti_via_pipeline(const LengthVector& l) {
  const DecompositionRanks d = decomposition(l);
  const int n = d.n;
  BettiVector out;
  out.n = n;
  out.ranks.resize(static_cast<std::size_t>(n - 2));
  for (int j = 0; j <= n - 3; ++j) {
    // rank of the cokernel in degree n-1-j plus rank of the kernel one lower.
    const std::size_t coker = static_cast<std::size_t>(n - 1 - j);
    const std::size_t ker = static_cast<std::size_t>(n - 2 - j);
    out.ranks[static_cast<std::size_t>(j)] = BigInt(d.C[coker] + d.D[coker]) + BigInt(d.B[ker]);
  }
  return out;
}

int intersection_pairing(int n, int i_max, SubsetMask J, SubsetMask Jp) {
  if (i_max < 1 || i_max > n)
    throw input_error("intersection_pairing: i_max out of range");
  if (!J.fits(n) || !Jp.fits(n))
    throw input_error("intersection_pairing: mask does not fit n");
  if (!J.contains(i_max) || !Jp.contains(i_max))
    throw input_error("intersection_pairing: both subsets must contain i_max");
  if (J.cardinality() + Jp.cardinality() != n + 1)
    throw input_error("intersection_pairing: |J| + |J'| must equal n + 1");
  const SubsetMask meet = J.intersect(Jp);
  return meet.cardinality() == 1 ? 1 : 0;
}

}  // namespace polyspace
