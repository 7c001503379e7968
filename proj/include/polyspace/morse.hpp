#pragma once

#include "polyspace/betti.hpp"
#include "polyspace/core.hpp"

namespace polyspace {

/// Critical point of the arm distance map below zero: one per long subset J,
/// with Morse index n - |J| and critical value -(L_J)^2 where
/// L_J = sum(J) - sum(complement).
struct CriticalPoint {
  SubsetMask J;
  int index = 0;
  BigInt value;

  bool operator==(const CriticalPoint& o) const = default;
};

/// ranks[i] = rank of H_i of the sublevel set just below zero; equals the
/// number of long subsets with n - |J| = i.
struct WaHomology {
  int n = 0;
  std::vector<std::uint64_t> ranks;

  bool operator==(const WaHomology& o) const = default;
};

/// Per-grading ranks of the torus homology basis {W_J}, split by subset class
/// and membership of the maximal link: grading i counts subsets of
/// cardinality n - i.
struct DecompositionRanks {
  int n = 0;
  int i_max = 0;
  std::vector<std::uint64_t> A;  // long, containing i_max
  std::vector<std::uint64_t> B;  // long, not containing i_max
  std::vector<std::uint64_t> C;  // short, containing i_max
  std::vector<std::uint64_t> D;  // median, containing i_max

  bool operator==(const DecompositionRanks& o) const = default;
};

/// One critical point per long subset, sorted by (index, mask). n <= 25.
std::vector<CriticalPoint> critical_points(const LengthVector& l);

WaHomology wa_homology(const LengthVector& l);

DecompositionRanks decomposition(const LengthVector& l);

/// Betti ranks recovered from the kernel/cokernel ranks of the inclusion of
/// the sublevel set into the torus: rank H^j = C_(n-1-j) + D_(n-1-j) +
/// B_(n-2-j). Independent of the census code path.
BettiVector betti_via_pipeline(const LengthVector& l);

/// Absolute intersection number of the basis classes [W_J], [W_J'] in
/// complementary dimensions: 1 iff the subsets meet exactly in the maximal
/// link. Requires i_max in both subsets and |J| + |J'| = n + 1.
int intersection_pairing(int n, int i_max, SubsetMask J, SubsetMask Jp);

}  // namespace polyspace
