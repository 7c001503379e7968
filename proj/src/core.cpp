#include "polyspace/core.hpp"

#include <algorithm>
#include <numeric>

namespace polyspace {

const char* to_string(SubsetClass c) {
  switch (c) {
    case SubsetClass::Short: return "short";
    case SubsetClass::Median: return "median";
    case SubsetClass::Long: return "long";
  }
  return "?";
}

std::string to_hex(SubsetMask m) {
  if (m.bits == 0) return "0";
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::uint64_t b = m.bits; b != 0; b >>= 4) out.push_back(digits[b & 0xf]);
  std::reverse(out.begin(), out.end());
  return out;
}

SubsetMask mask_from_hex(const std::string& hex) {
  if (hex.empty() || hex.size() > 16)
    throw input_error("bad mask literal \"" + hex + "\"");
  std::uint64_t bits = 0;
  for (char c : hex) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else throw input_error("bad mask literal \"" + hex + "\"");
    bits = (bits << 4) | static_cast<std::uint64_t>(d);
  }
  return SubsetMask(bits);
}

LengthVector::LengthVector(std::vector<BigInt> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.size() < 3)
    throw input_error("a length vector needs at least 3 entries, got " +
                      std::to_string(lengths_.size()));
  total_ = 0;
  for (const BigInt& l : lengths_) {
    if (l < 1)
      throw input_error("lengths must be positive integers, got " + l.get_str());
    total_ += l;
  }
}

LengthVector::LengthVector(std::initializer_list<long> lengths)
    : LengthVector(std::vector<BigInt>(lengths.begin(), lengths.end())) {}

LengthVector LengthVector::equilateral(int n) {
  return LengthVector(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

std::vector<int> LengthVector::sort_permutation() const {
  std::vector<int> perm(lengths_.size());
  std::iota(perm.begin(), perm.end(), 1);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return length(a) < length(b);
  });
  return perm;
}

LengthVector LengthVector::sorted() const {
  std::vector<BigInt> s(lengths_);
  std::stable_sort(s.begin(), s.end());
  return LengthVector(std::move(s));
}

BigInt LengthVector::subset_sum(SubsetMask J) const {
  BigInt sum = 0;
  std::uint64_t b = J.bits;
  while (b) {
    int i = std::countr_zero(b);
    sum += lengths_[static_cast<std::size_t>(i)];
    b &= b - 1;
  }
  return sum;
}

SubsetClass classify_subset(const LengthVector& l, SubsetMask J) {
  BigInt doubled = 2 * l.subset_sum(J);
  int c = cmp(doubled, l.total());
  if (c < 0) return SubsetClass::Short;
  if (c == 0) return SubsetClass::Median;
  return SubsetClass::Long;
}

namespace {

// Fallback for short vectors whose total is too large for the bitset table:
// walk all subsets with incremental Gray-code sums.
bool generic_by_enumeration(const LengthVector& l) {
  const int n = l.n();
  BigInt sum = 0;
  std::uint64_t gray = 0;
  for (std::uint64_t t = 1; t < (std::uint64_t{1} << n); ++t) {
    const int bit = std::countr_zero(t);
    gray ^= std::uint64_t{1} << bit;
    if ((gray >> bit) & 1u) sum += l.length(bit + 1);
    else sum -= l.length(bit + 1);
    if (2 * sum == l.total()) return false;
  }
  return true;
}

}  // namespace

bool is_generic(const LengthVector& l) {
  if (mpz_odd_p(l.total().get_mpz_t())) return true;
  BigInt half = l.total() / 2;

  // Bitset subset-sum DP over [0, half]; a median subset exists iff half is
  // reachable. Budget mirrors the census cell cap.
  const BigInt cells = BigInt(l.n()) * (half + 1);
  if (cells > BigInt(1'000'000'000)) {
    if (l.n() <= 24) return generic_by_enumeration(l);
    throw budget_error("is_generic: subset-sum table of " + cells.get_str() +
                       " cells exceeds the budget");
  }
  const std::uint64_t target = half.get_ui();
  const std::size_t words = static_cast<std::size_t>(target / 64 + 1);
  std::vector<std::uint64_t> reach(words, 0);
  reach[0] = 1;  // empty subset
  for (const BigInt& len : l.lengths()) {
    const std::uint64_t w = len.get_ui() > target ? target + 1 : len.get_ui();
    if (w > target) continue;  // cannot contribute to a sum <= half
    const std::size_t word_shift = static_cast<std::size_t>(w / 64);
    const unsigned bit_shift = static_cast<unsigned>(w % 64);
    for (std::size_t i = words; i-- > word_shift;) {
      std::uint64_t v = reach[i - word_shift] << bit_shift;
      if (bit_shift != 0 && i > word_shift)
        v |= reach[i - word_shift - 1] >> (64 - bit_shift);
      reach[i] |= v;
    }
    if ((reach[words - 1] >> (target % 64)) & 1u) return false;
  }
  return !((reach[words - 1] >> (target % 64)) & 1u);
}

int max_index(const LengthVector& l) {
  int best = 1;
  for (int i = 2; i <= l.n(); ++i)
    if (l.length(i) >= l.length(best)) best = i;
  return best;
}

}  // namespace polyspace
