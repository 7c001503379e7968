#pragma once

#include <iosfwd>

#include "polyspace/betti.hpp"
#include "polyspace/core.hpp"

namespace polyspace {

/// Chamber identity of a length vector: the full classification of subsets of
/// the ascending-sorted vector. Canonical under permutation and scaling; two
/// vectors with equal fingerprints have equal Betti vectors.
struct ChamberFingerprint {
  int n = 0;
  std::vector<std::uint32_t> short_masks;   // sorted; bit 0 = index 1
  std::vector<std::uint32_t> median_masks;  // non-empty iff non-generic

  bool operator==(const ChamberFingerprint& o) const = default;
};

struct AtlasEntry {
  ChamberFingerprint fingerprint;
  std::vector<BigInt> lengths;  // sorted representative
  BettiVector betti;
  BigInt total;
  bool generic = false;

  bool operator==(const AtlasEntry& o) const = default;
};

struct AtlasExtremes {
  int n = 0;
  std::size_t entries = 0;
  BigInt bound;             // B_n
  BigInt bound_generic;     // B'_n, set only for even n
  BigInt max_total;
  std::vector<BigInt> argmax_lengths;
  BigInt max_generic_total;                     // 0 when no generic entry exists
  std::vector<BigInt> argmax_generic_lengths;   // empty when no generic entry exists
  std::vector<std::vector<BigInt>> bound_violations;          // must stay empty
  std::vector<std::vector<BigInt>> generic_bound_violations;  // must stay empty
};

/// Classifies all 2^n subsets of the sorted vector. n <= 20.
ChamberFingerprint fingerprint(const LengthVector& l);

/// Builds an atlas entry (fingerprint, Betti data) for one vector.
AtlasEntry make_atlas_entry(const LengthVector& l);

/// Samples `samples` sorted integer vectors with entries in [1, max_len],
/// deduplicated by fingerprint; first occurrence supplies the representative.
/// Deterministic given the seed, independent of the worker count.
std::vector<AtlasEntry> sample_atlas(int n, int samples, int max_len, std::uint64_t seed);

/// Appends entries whose fingerprints are not yet present; keeps order.
void merge_atlas(std::vector<AtlasEntry>& atlas, std::vector<AtlasEntry> more);

/// Extremal totals and bound violations among entries with the given n.
AtlasExtremes atlas_extremes(const std::vector<AtlasEntry>& atlas, int n);

/// Line-delimited serialization: one JSON object per line.
std::string atlas_line(const AtlasEntry& entry);
AtlasEntry parse_atlas_line(const std::string& line);
std::vector<AtlasEntry> read_atlas(std::istream& in);
void write_atlas(std::ostream& out, const std::vector<AtlasEntry>& atlas);

}  // namespace polyspace
