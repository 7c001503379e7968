#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace polyspace {

using BigInt = mpz_class;

// Error categories; the CLI maps them to exit codes (2 / 3 / 4).
class input_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class budget_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when a Monte-Carlo run yields too few samples to call a result.
class inconclusive_error : public budget_error {
public:
  using budget_error::budget_error;
};

// Raised when two independent code paths disagree; a bug sentinel.
class crosscheck_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised when a numeric Hessian eigenvalue falls inside the dead zone.
class degenerate_hessian_error : public crosscheck_error {
public:
  using crosscheck_error::crosscheck_error;
};

enum class SubsetClass { Short, Median, Long };

const char* to_string(SubsetClass c);

/// Subset of {1,...,n}; index i lives at bit i-1. Usable for n <= 64.
struct SubsetMask {
  std::uint64_t bits = 0;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t b) : bits(b) {}

  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static SubsetMask of(std::initializer_list<int> indices) {
    SubsetMask m;
    for (int i : indices) m = m.with(i);
    return m;
  }

  constexpr bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
  constexpr SubsetMask with(int i) const { return SubsetMask(bits | (std::uint64_t{1} << (i - 1))); }
  constexpr SubsetMask without(int i) const { return SubsetMask(bits & ~(std::uint64_t{1} << (i - 1))); }
  constexpr SubsetMask complement(int n) const { return SubsetMask(~bits & full(n).bits); }
  constexpr SubsetMask intersect(SubsetMask o) const { return SubsetMask(bits & o.bits); }
  constexpr int cardinality() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr bool fits(int n) const { return (bits & ~full(n).bits) == 0; }

  auto operator<=>(const SubsetMask&) const = default;
};

std::string to_hex(SubsetMask m);
SubsetMask mask_from_hex(const std::string& hex);

/// Exact positive integer side lengths l = (l_1, ..., l_n), n >= 3.
class LengthVector {
public:
  explicit LengthVector(std::vector<BigInt> lengths);
  LengthVector(std::initializer_list<long> lengths);

  static LengthVector equilateral(int n);

  int n() const { return static_cast<int>(lengths_.size()); }
  const BigInt& length(int i) const { return lengths_[static_cast<std::size_t>(i - 1)]; }  // 1-based
  const std::vector<BigInt>& lengths() const { return lengths_; }
  const BigInt& total() const { return total_; }

  /// Ascending stable sort; ties keep input order.
  LengthVector sorted() const;
  /// Permutation p with sorted()[k] == length(p[k]); 1-based entries.
  std::vector<int> sort_permutation() const;

  BigInt subset_sum(SubsetMask J) const;

  bool operator==(const LengthVector& o) const { return lengths_ == o.lengths_; }

private:
  std::vector<BigInt> lengths_;
  BigInt total_;
};

/// Short/median/long trichotomy: compares 2*sum(J) against the total, exactly.
SubsetClass classify_subset(const LengthVector& l, SubsetMask J);

/// True iff no subset sums to exactly half the total (subset-sum reachability).
bool is_generic(const LengthVector& l);

/// Index (1-based) of a maximal-length link; ties resolved to the largest index.
int max_index(const LengthVector& l);

}  // namespace polyspace
