// Command-line surface for the polygon-space engine. Emits structured JSON by
// default; --plain and --csv render the same record for humans and tables.
//
// Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 internal
// cross-check failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyspace/atlas.hpp"
#include "polyspace/betti.hpp"
#include "polyspace/census.hpp"
#include "polyspace/core.hpp"
#include "polyspace/morse.hpp"
#include "polyspace/numeric.hpp"
#include "polyspace/parse.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polyspace;

enum class OutputMode { Json, Plain, Csv };

std::string scalar_to_string(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten_plain(const ordered_json& j, const std::string& prefix, std::vector<std::string>& lines) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_plain(value, prefix.empty() ? key : prefix + "." + key, lines);
  } else if (j.is_array()) {
    bool scalars = true;
    for (const auto& v : j)
      if (v.is_object() || v.is_array()) scalars = false;
    if (scalars) {
      std::string joined;
      for (const auto& v : j) {
        if (!joined.empty()) joined += ' ';
        joined += scalar_to_string(v);
      }
      lines.push_back(prefix + ": " + joined);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i)
        flatten_plain(j[i], prefix + "[" + std::to_string(i) + "]", lines);
    }
  } else {
    lines.push_back(prefix + ": " + scalar_to_string(j));
  }
}

void flatten_csv(const ordered_json& j, const std::string& prefix, std::vector<std::string>& rows) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_csv(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const auto& v = j[i];
      if (v.is_object() || v.is_array())
        flatten_csv(v, prefix + "[" + std::to_string(i) + "]", rows);
      else
        rows.push_back(prefix + "," + std::to_string(i) + "," + scalar_to_string(v));
    }
  } else {
    rows.push_back(prefix + ",," + scalar_to_string(j));
  }
}

void emit(const ordered_json& result, OutputMode mode) {
  switch (mode) {
    case OutputMode::Json:
      std::cout << result.dump() << '\n';
      break;
    case OutputMode::Plain: {
      std::vector<std::string> lines;
      flatten_plain(result, "", lines);
      for (const std::string& line : lines) std::cout << line << '\n';
      break;
    }
    case OutputMode::Csv: {
      std::vector<std::string> rows;
      flatten_csv(result, "", rows);
      std::cout << "field,index,value\n";
      for (const std::string& row : rows) std::cout << row << '\n';
      break;
    }
  }
}

ordered_json bigints_to_json(const std::vector<BigInt>& values) {
  ordered_json out = ordered_json::array();
  for (const BigInt& v : values) out.push_back(v.get_str());
  return out;
}

ordered_json counts_to_json(const std::vector<std::uint64_t>& values) {
  ordered_json out = ordered_json::array();
  for (std::uint64_t v : values) out.push_back(v);
  return out;
}

// Shared "lengths" input: a comma-separated positional or --file.
struct LengthInput {
  std::string csv;
  std::string file;

  LengthVector resolve() const {
    if (!file.empty() && !csv.empty())
      throw input_error("give lengths either inline or via --file, not both");
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw input_error("cannot open file \"" + file + "\"");
      std::string token, joined;
      while (in >> token) {
        if (!joined.empty() && joined.back() != ',' && token.front() != ',') joined += ',';
        joined += token;
      }
      return parse_lengths(joined);
    }
    if (csv.empty()) throw input_error("no lengths given");
    return parse_lengths(csv);
  }
};

void add_length_options(CLI::App* sub, LengthInput& input) {
  sub->add_option("lengths", input.csv, "comma-separated side lengths, e.g. 3,2,2,1,1");
  sub->add_option("--file", input.file, "read lengths from a file instead");
}

ordered_json echo_lengths(const LengthVector& l) {
  return bigints_to_json(l.lengths());
}

CensusBackend backend_from_string(const std::string& name) {
  if (name == "naive") return CensusBackend::Naive;
  if (name == "dp") return CensusBackend::Dp;
  throw input_error("unknown backend \"" + name + "\" (expected naive or dp)");
}

// The betti command cross-checks the census formula against the Morse
// pipeline whenever the vector is small enough to enumerate.
constexpr int kInlineCrosscheckLimit = 20;

ordered_json run_betti(const LengthVector& l, const std::string& backend_name,
                       std::uint64_t max_cells) {
  const CensusOptions opts{max_cells};
  const BettiVector betti = betti_vector(l, backend_from_string(backend_name), opts);
  std::string crosscheck = "skipped";
  if (l.n() <= kInlineCrosscheckLimit) {
    if (betti_via_pipeline(l) != betti)
      throw crosscheck_error("betti: Morse pipeline disagrees with the census formula");
    crosscheck = "pipeline";
  }
  ordered_json out;
  out["command"] = "betti";
  out["lengths"] = echo_lengths(l);
  out["n"] = l.n();
  out["backend"] = backend_name;
  out["betti"] = bigints_to_json(betti.ranks);
  out["total"] = betti.total().get_str();
  out["generic"] = is_generic(l);
  out["empty"] = is_empty(l);
  out["components"] = component_count(l);
  out["crosscheck"] = crosscheck;
  return out;
}

ordered_json run_poincare(const LengthVector& l, const std::string& backend_name,
                          std::uint64_t max_cells) {
  const PoincarePolynomial poly = poincare(l, backend_from_string(backend_name), CensusOptions{max_cells});
  ordered_json out;
  out["command"] = "poincare";
  out["lengths"] = echo_lengths(l);
  out["n"] = l.n();
  out["q"] = bigints_to_json(poly.q);
  out["r"] = bigints_to_json(poly.r);
  out["p"] = bigints_to_json(poly.p);
  return out;
}

ordered_json run_census(const LengthVector& l, const std::string& backend_name,
                        std::uint64_t max_cells, int prefix_i) {
  ordered_json out;
  out["command"] = "census";
  out["lengths"] = echo_lengths(l);
  out["n"] = l.n();
  if (prefix_i > 0) {
    const PrefixCensus pc = prefix_census(l, prefix_i);
    out["prefix"] = pc.i;
    out["S"] = pc.shorts.get_str();
    out["M"] = pc.medians.get_str();
    return out;
  }
  const Census c = compute_census(l, backend_from_string(backend_name), CensusOptions{max_cells});
  out["backend"] = backend_name;
  out["i_max"] = c.i_max;
  out["a"] = bigints_to_json(c.a);
  out["b"] = bigints_to_json(c.b);
  out["high_short"] = c.high_short.get_str();
  out["high_median"] = c.high_median.get_str();
  out["long_count"] = c.long_count.get_str();
  return out;
}

ordered_json run_bounds(int n, bool generic, bool asymptotic) {
  ordered_json out;
  out["command"] = "bounds";
  out["n"] = n;
  out["generic"] = generic;
  out["bound"] = (generic ? bound_total_generic_even(n) : bound_total(n)).get_str();
  if (asymptotic) out["asymptotic_estimate"] = bound_asymptotic(n);
  return out;
}

ordered_json run_morse(const LengthVector& l, bool with_points) {
  const DecompositionRanks d = decomposition(l);
  const WaHomology wa = wa_homology(l);
  const BettiVector pipeline = betti_via_pipeline(l);
  ordered_json out;
  out["command"] = "morse";
  out["lengths"] = echo_lengths(l);
  out["n"] = l.n();
  out["i_max"] = d.i_max;
  out["index_histogram"] = counts_to_json(wa.ranks);
  out["A"] = counts_to_json(d.A);
  out["B"] = counts_to_json(d.B);
  out["C"] = counts_to_json(d.C);
  out["D"] = counts_to_json(d.D);
  out["pipeline_betti"] = bigints_to_json(pipeline.ranks);
  std::uint64_t long_total = 0;
  for (std::uint64_t v : wa.ranks) long_total += v;
  out["critical_points"] = long_total;
  if (with_points) {
    ordered_json points = ordered_json::array();
    for (const CriticalPoint& p : critical_points(l)) {
      ordered_json entry;
      entry["mask"] = to_hex(p.J);
      entry["index"] = p.index;
      entry["value"] = p.value.get_str();
      points.push_back(std::move(entry));
    }
    out["points"] = std::move(points);
  }
  return out;
}

ordered_json run_verify(const LengthVector& l, bool numeric) {
  const int n = l.n();
  const BettiVector formula = betti_vector(l);
  const BettiVector pipeline = betti_via_pipeline(l);
  const DecompositionRanks d = decomposition(l);
  const WaHomology wa = wa_homology(l);

  bool wa_match = true;
  for (std::size_t i = 0; i < wa.ranks.size(); ++i)
    if (d.A[i] + d.B[i] != wa.ranks[i]) wa_match = false;
  std::uint64_t basis_count = 0;
  for (std::size_t i = 0; i < wa.ranks.size(); ++i) basis_count += d.A[i] + d.C[i] + d.D[i];
  const bool basis_ok = BigInt(basis_count) == (BigInt(1) << (n - 1));
  const bool pipeline_ok = formula == pipeline;

  ordered_json checks;
  checks["pipeline_equals_formula"] = pipeline_ok;
  checks["wa_ranks_match_decomposition"] = wa_match;
  checks["torus_basis_count"] = basis_ok;
  bool all_ok = pipeline_ok && wa_match && basis_ok;

  if (n <= 10) {
    // The duality pairing over complementary-cardinality bases must be a
    // permutation matrix.
    const int i_max = max_index(l);
    bool pairing_ok = true;
    std::vector<SubsetMask> by_card[65];
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      SubsetMask m(bits);
      if (m.contains(i_max)) by_card[m.cardinality()].push_back(m);
    }
    for (int card = 1; card <= n && pairing_ok; ++card) {
      const int dual_card = n + 1 - card;
      if (dual_card < 1 || dual_card > n) continue;
      for (const SubsetMask& row : by_card[card]) {
        int ones = 0;
        for (const SubsetMask& col : by_card[dual_card])
          ones += intersection_pairing(n, i_max, row, col);
        if (ones != 1) pairing_ok = false;
      }
    }
    checks["pairing_permutation"] = pairing_ok;
    all_ok = all_ok && pairing_ok;
  } else {
    checks["pairing_permutation"] = nullptr;
  }

  if (numeric) {
    if (n > 12)
      throw budget_error("verify --numeric: n = " + std::to_string(n) +
                         " exceeds the numeric budget (12)");
    const double scale = l.total().get_d() * l.total().get_d();
    bool grad_ok = true, index_ok = true, value_ok = true;
    for (const CriticalPoint& p : critical_points(l)) {
      const ArmConfiguration c = collinear_config(l, p.J);
      double sup = 0;
      for (double g : grad_f(l, c)) sup = std::max(sup, std::abs(g));
      if (sup > 1e-9 * scale) grad_ok = false;
      if (morse_index_numeric(l, p.J) != p.index) index_ok = false;
      const double expected = p.value.get_d();
      if (std::abs(f_arm(l, c) - expected) > 1e-10 * std::abs(expected)) value_ok = false;
    }
    checks["numeric_gradient_vanishes"] = grad_ok;
    checks["numeric_morse_index"] = index_ok;
    checks["numeric_critical_value"] = value_ok;
    all_ok = all_ok && grad_ok && index_ok && value_ok;
  }

  ordered_json out;
  out["command"] = "verify";
  out["lengths"] = echo_lengths(l);
  out["n"] = n;
  out["formula_betti"] = bigints_to_json(formula.ranks);
  out["pipeline_betti"] = bigints_to_json(pipeline.ranks);
  out["checks"] = std::move(checks);
  out["ok"] = all_ok;
  if (!all_ok) throw crosscheck_error("verify: " + out.dump());
  return out;
}

ordered_json run_b0_oracle(const LengthVector& l, int samples, double closure_tol,
                           double link_radius, std::uint64_t seed) {
  const int estimate = sample_components(l, samples, closure_tol, link_radius, seed);
  const int expected = component_count(l);
  ordered_json out;
  out["command"] = "b0-oracle";
  out["lengths"] = echo_lengths(l);
  out["n"] = l.n();
  out["samples"] = samples;
  out["closure_tol"] = closure_tol;
  out["link_radius"] = link_radius;
  out["seed"] = seed;
  out["components_estimate"] = estimate;
  out["component_count"] = expected;
  out["match"] = estimate == expected;
  return out;
}

ordered_json run_atlas_sample(int n, int samples, int max_len, std::uint64_t seed,
                              bool seed_extremal, const std::string& out_file) {
  std::vector<AtlasEntry> atlas = sample_atlas(n, samples, max_len, seed);
  if (seed_extremal) {
    std::vector<AtlasEntry> seeded;
    seeded.push_back(make_atlas_entry(LengthVector::equilateral(n)));
    if (n % 2 == 0) {
      std::vector<BigInt> steps(static_cast<std::size_t>(n), BigInt(2));
      steps[0] = 1;
      seeded.push_back(make_atlas_entry(LengthVector(std::move(steps))));
    }
    merge_atlas(atlas, std::move(seeded));
  }

  std::size_t new_chambers = atlas.size();
  if (out_file.empty()) {
    write_atlas(std::cout, atlas);
    return ordered_json();  // the lines are the output
  }
  std::vector<AtlasEntry> merged;
  {
    std::ifstream in(out_file);
    if (in) merged = read_atlas(in);
  }
  const std::size_t before = merged.size();
  merge_atlas(merged, std::move(atlas));
  new_chambers = merged.size() - before;
  const std::string tmp = out_file + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw input_error("cannot write file \"" + tmp + "\"");
    write_atlas(out, merged);
  }
  if (std::rename(tmp.c_str(), out_file.c_str()) != 0)
    throw input_error("cannot replace file \"" + out_file + "\"");

  ordered_json out;
  out["command"] = "atlas-sample";
  out["n"] = n;
  out["samples"] = samples;
  out["max_len"] = max_len;
  out["seed"] = seed;
  out["seed_extremal"] = seed_extremal;
  out["out"] = out_file;
  out["new_chambers"] = new_chambers;
  out["atlas_size"] = merged.size();
  return out;
}

ordered_json extremes_to_json(const AtlasExtremes& e) {
  ordered_json out;
  out["n"] = e.n;
  out["entries"] = e.entries;
  out["bound"] = e.bound.get_str();
  if (e.n % 2 == 0) out["bound_generic"] = e.bound_generic.get_str();
  out["max_total"] = e.max_total.get_str();
  out["argmax"] = bigints_to_json(e.argmax_lengths);
  if (!e.argmax_generic_lengths.empty()) {
    out["max_generic_total"] = e.max_generic_total.get_str();
    out["argmax_generic"] = bigints_to_json(e.argmax_generic_lengths);
  }
  ordered_json violations = ordered_json::array();
  for (const auto& v : e.bound_violations) violations.push_back(bigints_to_json(v));
  out["violations"] = std::move(violations);
  ordered_json generic_violations = ordered_json::array();
  for (const auto& v : e.generic_bound_violations) generic_violations.push_back(bigints_to_json(v));
  out["generic_violations"] = std::move(generic_violations);
  return out;
}

ordered_json run_atlas_report(const std::string& in_file, int n) {
  std::ifstream in(in_file);
  if (!in) throw input_error("cannot open file \"" + in_file + "\"");
  const std::vector<AtlasEntry> atlas = read_atlas(in);
  ordered_json out;
  out["command"] = "atlas-report";
  out["in"] = in_file;
  if (n > 0) {
    out.update(extremes_to_json(atlas_extremes(atlas, n)));
    return out;
  }
  std::vector<int> ns;
  for (const AtlasEntry& e : atlas)
    if (std::find(ns.begin(), ns.end(), e.fingerprint.n) == ns.end())
      ns.push_back(e.fingerprint.n);
  std::sort(ns.begin(), ns.end());
  ordered_json reports = ordered_json::array();
  for (int distinct_n : ns) reports.push_back(extremes_to_json(atlas_extremes(atlas, distinct_n)));
  out["reports"] = std::move(reports);
  return out;
}

ordered_json run_fingerprint(const LengthVector& l) {
  const ChamberFingerprint fp = fingerprint(l);
  ordered_json out;
  out["command"] = "fingerprint";
  out["lengths"] = echo_lengths(l);
  out["n"] = fp.n;
  out["sorted"] = bigints_to_json(l.sorted().lengths());
  ordered_json shorts = ordered_json::array();
  for (std::uint32_t m : fp.short_masks) shorts.push_back(to_hex(SubsetMask(m)));
  out["short_masks"] = std::move(shorts);
  ordered_json medians = ordered_json::array();
  for (std::uint32_t m : fp.median_masks) medians.push_back(to_hex(SubsetMask(m)));
  out["median_masks"] = std::move(medians);
  out["generic"] = fp.median_masks.empty();
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact Betti numbers of planar polygon moduli spaces"};
  app.require_subcommand(1);

  bool plain = false, csv = false;
  app.add_flag("--plain", plain, "human-readable key: value output");
  app.add_flag("--csv", csv, "field,index,value table output");

  std::optional<ordered_json> result;

  LengthInput betti_in;
  std::string betti_backend = "dp";
  std::uint64_t betti_cells = CensusOptions{}.max_cells;
  auto* betti_cmd = app.add_subcommand("betti", "Betti vector of the moduli space");
  betti_cmd->fallthrough();
  add_length_options(betti_cmd, betti_in);
  betti_cmd->add_option("--backend", betti_backend, "census backend: dp or naive");
  betti_cmd->add_option("--max-cells", betti_cells, "cell budget for the DP backend");
  betti_cmd->callback([&] { result = run_betti(betti_in.resolve(), betti_backend, betti_cells); });

  LengthInput poincare_in;
  std::string poincare_backend = "dp";
  std::uint64_t poincare_cells = CensusOptions{}.max_cells;
  auto* poincare_cmd = app.add_subcommand("poincare", "Poincare polynomial split q, r, p");
  poincare_cmd->fallthrough();
  add_length_options(poincare_cmd, poincare_in);
  poincare_cmd->add_option("--backend", poincare_backend, "census backend: dp or naive");
  poincare_cmd->add_option("--max-cells", poincare_cells, "cell budget for the DP backend");
  poincare_cmd->callback(
      [&] { result = run_poincare(poincare_in.resolve(), poincare_backend, poincare_cells); });

  LengthInput census_in;
  std::string census_backend = "dp";
  std::uint64_t census_cells = CensusOptions{}.max_cells;
  int census_prefix = 0;
  auto* census_cmd = app.add_subcommand("census", "short/median counts a_k, b_k (or S_i, M_i)");
  census_cmd->fallthrough();
  add_length_options(census_cmd, census_in);
  census_cmd->add_option("--backend", census_backend, "census backend: dp or naive");
  census_cmd->add_option("--max-cells", census_cells, "cell budget for the DP backend");
  census_cmd->add_option("--prefix", census_prefix, "report S_i, M_i for this i instead");
  census_cmd->callback(
      [&] { result = run_census(census_in.resolve(), census_backend, census_cells, census_prefix); });

  int bounds_n = 0;
  bool bounds_generic = false, bounds_asymptotic = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "sharp total-Betti bounds B_n / B'_n");
  bounds_cmd->fallthrough();
  bounds_cmd->add_option("n", bounds_n, "number of links")->required();
  bounds_cmd->add_flag("--generic", bounds_generic, "bound over generic vectors (even n)");
  bounds_cmd->add_flag("--asymptotic", bounds_asymptotic, "include the floating-point estimate");
  bounds_cmd->callback([&] { result = run_bounds(bounds_n, bounds_generic, bounds_asymptotic); });

  LengthInput morse_in;
  bool morse_points = false;
  auto* morse_cmd = app.add_subcommand("morse", "critical points and the A/B/C/D decomposition");
  morse_cmd->fallthrough();
  add_length_options(morse_cmd, morse_in);
  morse_cmd->add_flag("--points", morse_points, "list every critical point");
  morse_cmd->callback([&] { result = run_morse(morse_in.resolve(), morse_points); });

  LengthInput verify_in;
  bool verify_numeric = false;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check the census formula against the pipeline");
  verify_cmd->fallthrough();
  add_length_options(verify_cmd, verify_in);
  verify_cmd->add_flag("--numeric", verify_numeric, "also run Hessian/gradient checks");
  verify_cmd->callback([&] { result = run_verify(verify_in.resolve(), verify_numeric); });

  LengthInput b0_in;
  int b0_samples = 2000;
  double b0_closure = 1e-2, b0_radius = 0.6;
  std::uint64_t b0_seed = 1;
  auto* b0_cmd = app.add_subcommand("b0-oracle", "Monte-Carlo connected-component count");
  b0_cmd->fallthrough();
  add_length_options(b0_cmd, b0_in);
  b0_cmd->add_option("--samples", b0_samples, "number of random arms");
  b0_cmd->add_option("--closure-tol", b0_closure, "end-to-end distance counted as closed");
  b0_cmd->add_option("--link-radius", b0_radius, "torus distance linking survivors");
  b0_cmd->add_option("--seed", b0_seed, "RNG seed");
  b0_cmd->callback(
      [&] { result = run_b0_oracle(b0_in.resolve(), b0_samples, b0_closure, b0_radius, b0_seed); });

  int atlas_n = 0, atlas_samples = 10000, atlas_max_len = 20;
  std::uint64_t atlas_seed = 1;
  bool atlas_extremal = false;
  std::string atlas_out;
  auto* atlas_sample_cmd = app.add_subcommand("atlas-sample", "sample chambers into an atlas");
  atlas_sample_cmd->fallthrough();
  atlas_sample_cmd->add_option("n", atlas_n, "number of links (3..9)")->required();
  atlas_sample_cmd->add_option("--samples", atlas_samples, "number of random vectors");
  atlas_sample_cmd->add_option("--max-len", atlas_max_len, "entries drawn from [1, max-len]");
  atlas_sample_cmd->add_option("--seed", atlas_seed, "RNG seed");
  atlas_sample_cmd->add_flag("--seed-extremal", atlas_extremal,
                             "also seed the equilateral and (1,2,...,2) chambers");
  atlas_sample_cmd->add_option("--out", atlas_out, "atlas file to merge into (stdout if absent)");
  atlas_sample_cmd->callback([&] {
    ordered_json summary =
        run_atlas_sample(atlas_n, atlas_samples, atlas_max_len, atlas_seed, atlas_extremal, atlas_out);
    if (!summary.is_null()) result = std::move(summary);
  });

  std::string report_in;
  int report_n = 0;
  auto* atlas_report_cmd = app.add_subcommand("atlas-report", "extremal chambers of an atlas file");
  atlas_report_cmd->fallthrough();
  atlas_report_cmd->add_option("--in", report_in, "atlas file")->required();
  atlas_report_cmd->add_option("--n", report_n, "restrict to one n");
  atlas_report_cmd->callback([&] { result = run_atlas_report(report_in, report_n); });

  LengthInput fingerprint_in;
  auto* fingerprint_cmd = app.add_subcommand("fingerprint", "chamber fingerprint of a vector");
  fingerprint_cmd->fallthrough();
  add_length_options(fingerprint_cmd, fingerprint_in);
  fingerprint_cmd->callback([&] { result = run_fingerprint(fingerprint_in.resolve()); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  if (plain && csv) throw input_error("--plain and --csv are mutually exclusive");
  const OutputMode mode = plain ? OutputMode::Plain : (csv ? OutputMode::Csv : OutputMode::Json);
  if (result) emit(*result, mode);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const crosscheck_error& e) {
    std::cerr << "internal cross-check failure: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
