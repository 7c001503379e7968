#include "polyspace/atlas.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "polyspace/parallel.hpp"

namespace polyspace {

namespace {

struct FingerprintHash {
  std::size_t operator()(const ChamberFingerprint& f) const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(f.n));
    for (std::uint32_t m : f.short_masks) mix(m);
    mix(0xffffffffffffffffull);
    for (std::uint32_t m : f.median_masks) mix(m);
    return static_cast<std::size_t>(h);
  }
};

std::vector<BigInt> to_bigints(const std::vector<std::uint64_t>& v) {
  std::vector<BigInt> out;
  out.reserve(v.size());
  for (std::uint64_t x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

}  // namespace

ChamberFingerprint fingerprint(const LengthVector& l) {
  const int n = l.n();
  if (n > 20)
    throw budget_error("fingerprint: n = " + std::to_string(n) +
                       " exceeds the enumeration budget (20)");
  const LengthVector s = l.sorted();
  ChamberFingerprint out;
  out.n = n;
  const std::uint32_t count = std::uint32_t{1} << n;
  if (2 * s.total() <= BigInt("4611686018854775807")) {
    std::vector<std::int64_t> len(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) len[static_cast<std::size_t>(i - 1)] = s.length(i).get_si();
    const std::int64_t total = s.total().get_si();
    std::vector<std::int64_t> sums(count);
    for (std::uint32_t m = 1; m < count; ++m)
      sums[m] = sums[m & (m - 1)] + len[static_cast<std::size_t>(std::countr_zero(m))];
    for (std::uint32_t m = 0; m < count; ++m) {
      const std::int64_t doubled = 2 * sums[m];
      if (doubled < total) out.short_masks.push_back(m);
      else if (doubled == total) out.median_masks.push_back(m);
    }
  } else {
    for (std::uint32_t m = 0; m < count; ++m) {
      switch (classify_subset(s, SubsetMask(m))) {
        case SubsetClass::Short: out.short_masks.push_back(m); break;
        case SubsetClass::Median: out.median_masks.push_back(m); break;
        case SubsetClass::Long: break;
      }
    }
  }
  return out;
}

AtlasEntry make_atlas_entry(const LengthVector& l) {
  const LengthVector s = l.sorted();
  AtlasEntry entry;
  entry.fingerprint = fingerprint(s);
  entry.lengths = s.lengths();
  entry.betti = betti_vector(s, CensusBackend::Naive);
  entry.total = entry.betti.total();
  entry.generic = entry.fingerprint.median_masks.empty();
  return entry;
}

std::vector<AtlasEntry> sample_atlas(int n, int samples, int max_len, std::uint64_t seed) {
  if (n < 3 || n > 9)
    throw input_error("sample_atlas: n = " + std::to_string(n) + " out of range [3, 9]");
  if (samples < 0) throw input_error("sample_atlas: negative sample count");
  if (max_len < 1) throw input_error("sample_atlas: max_len must be at least 1");

  // Chunk-local discovery, then an index-ordered merge: the resulting atlas
  // equals the serial first-occurrence scan for any worker count.
  struct Found {
    std::uint64_t idx;
    AtlasEntry entry;
  };
  std::vector<std::vector<Found>> per_worker(static_cast<std::size_t>(worker_count()));
  parallel_chunks(0, static_cast<std::uint64_t>(samples), [&](int worker, std::uint64_t lo, std::uint64_t hi) {
    std::unordered_set<ChamberFingerprint, FingerprintHash> seen;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
      std::mt19937_64 rng(sseq);
      std::vector<std::uint64_t> draw(static_cast<std::size_t>(n));
      for (auto& v : draw) v = 1 + rng() % static_cast<std::uint64_t>(max_len);
      std::sort(draw.begin(), draw.end());
      const LengthVector l(to_bigints(draw));
      ChamberFingerprint fp = fingerprint(l);
      if (!seen.insert(fp).second) continue;
      AtlasEntry entry;
      entry.fingerprint = std::move(fp);
      entry.lengths = l.lengths();
      entry.betti = betti_vector(l, CensusBackend::Naive);
      entry.total = entry.betti.total();
      entry.generic = entry.fingerprint.median_masks.empty();
      per_worker[static_cast<std::size_t>(worker)].push_back(Found{idx, std::move(entry)});
    }
  });

  std::vector<Found> found;
  for (auto& chunk : per_worker)
    found.insert(found.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
  std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.idx < b.idx; });
  std::vector<AtlasEntry> atlas;
  std::unordered_set<ChamberFingerprint, FingerprintHash> seen;
  for (Found& f : found)
    if (seen.insert(f.entry.fingerprint).second) atlas.push_back(std::move(f.entry));
  return atlas;
}

void merge_atlas(std::vector<AtlasEntry>& atlas, std::vector<AtlasEntry> more) {
  std::unordered_set<ChamberFingerprint, FingerprintHash> seen;
  for (const AtlasEntry& e : atlas) seen.insert(e.fingerprint);
  for (AtlasEntry& e : more)
    if (seen.insert(e.fingerprint).second) atlas.push_back(std::move(e));
}

AtlasExtremes atlas_extremes(const std::vector<AtlasEntry>& atlas, int n) {
  AtlasExtremes out;
  out.n = n;
  out.bound = bound_total(n);
  if (n % 2 == 0 && n >= 4) out.bound_generic = bound_total_generic_even(n);
  bool any = false;
  bool any_generic = false;
  for (const AtlasEntry& e : atlas) {
    if (e.fingerprint.n != n) continue;
    ++out.entries;
    if (!any || e.total > out.max_total) {
      out.max_total = e.total;
      out.argmax_lengths = e.lengths;
    }
    any = true;
    if (e.total > out.bound) out.bound_violations.push_back(e.lengths);
    if (e.generic) {
      if (!any_generic || e.total > out.max_generic_total) {
        out.max_generic_total = e.total;
        out.argmax_generic_lengths = e.lengths;
      }
      any_generic = true;
      if (n % 2 == 0 && e.total > out.bound_generic)
        out.generic_bound_violations.push_back(e.lengths);
    }
  }
  if (!any)
    throw input_error("atlas_extremes: no entries with n = " + std::to_string(n));
  return out;
}

std::string atlas_line(const AtlasEntry& entry) {
  nlohmann::ordered_json j;
  j["n"] = entry.fingerprint.n;
  nlohmann::ordered_json lengths = nlohmann::ordered_json::array();
  for (const BigInt& v : entry.lengths) lengths.push_back(v.get_str());
  j["lengths"] = std::move(lengths);
  nlohmann::ordered_json shorts = nlohmann::ordered_json::array();
  for (std::uint32_t m : entry.fingerprint.short_masks) shorts.push_back(to_hex(SubsetMask(m)));
  j["short_masks"] = std::move(shorts);
  nlohmann::ordered_json medians = nlohmann::ordered_json::array();
  for (std::uint32_t m : entry.fingerprint.median_masks) medians.push_back(to_hex(SubsetMask(m)));
  j["median_masks"] = std::move(medians);
  nlohmann::ordered_json betti = nlohmann::ordered_json::array();
  for (const BigInt& v : entry.betti.ranks) betti.push_back(v.get_str());
  j["betti"] = std::move(betti);
  j["total"] = entry.total.get_str();
  j["generic"] = entry.generic;
  return j.dump();
}

AtlasEntry parse_atlas_line(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad atlas line: ") + e.what());
  }
  try {
    AtlasEntry entry;
    entry.fingerprint.n = j.at("n").get<int>();
    for (const auto& v : j.at("lengths")) entry.lengths.emplace_back(v.get<std::string>(), 10);
    for (const auto& v : j.at("short_masks"))
      entry.fingerprint.short_masks.push_back(
          static_cast<std::uint32_t>(mask_from_hex(v.get<std::string>()).bits));
    for (const auto& v : j.at("median_masks"))
      entry.fingerprint.median_masks.push_back(
          static_cast<std::uint32_t>(mask_from_hex(v.get<std::string>()).bits));
    entry.betti.n = entry.fingerprint.n;
    for (const auto& v : j.at("betti")) entry.betti.ranks.emplace_back(v.get<std::string>(), 10);
    entry.total = BigInt(j.at("total").get<std::string>(), 10);
    entry.generic = j.at("generic").get<bool>();
    if (static_cast<int>(entry.lengths.size()) != entry.fingerprint.n)
      throw input_error("bad atlas line: lengths do not match n");
    return entry;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("bad atlas line: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw input_error("bad atlas line: malformed integer");
  }
}

std::vector<AtlasEntry> read_atlas(std::istream& in) {
  std::vector<AtlasEntry> atlas;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    merge_atlas(atlas, {parse_atlas_line(line)});
  }
  return atlas;
}

void write_atlas(std::ostream& out, const std::vector<AtlasEntry>& atlas) {
  for (const AtlasEntry& e : atlas) out << atlas_line(e) << '\n';
}

}  // namespace polyspace
