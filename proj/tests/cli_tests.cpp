// End-to-end checks of the polyspace binary: spawns the real executable and
// inspects stdout/stderr and exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const std::string command = env_prefix + std::string(POLYSPACE_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

json parse_output(const RunResult& r) {
  REQUIRE(r.exit_code == 0);
  return json::parse(r.output);
}

}  // namespace

TEST_CASE("betti command on the worked pentagon") {
  const json out = parse_output(run_cli("betti 3,2,2,1,1"));
  CHECK(out["betti"] == json({"1", "4", "1"}));
  CHECK(out["total"] == "6");
  CHECK(out["generic"] == true);
  CHECK(out["empty"] == false);
  CHECK(out["components"] == 1);
  CHECK(out["crosscheck"] == "pipeline");
}

TEST_CASE("betti accepts decimals and scales them exactly") {
  const json out = parse_output(run_cli("betti 1.5,1,1,1"));
  CHECK(out["lengths"] == json({"3", "2", "2", "2"}));
}

TEST_CASE("betti via --file") {
  const std::string path = "/tmp/polyspace_cli_lengths.txt";
  std::ofstream(path) << "3,2,2,\n1,1\n";
  const json out = parse_output(run_cli("betti --file " + path));
  CHECK(out["betti"] == json({"1", "4", "1"}));
  std::remove(path.c_str());
}

TEST_CASE("invalid input exits 2 and names the token") {
  const RunResult r = run_cli("betti 3,0,1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("\"0\"") != std::string::npos);

  CHECK(run_cli("betti 1,2").exit_code == 2);
  CHECK(run_cli("betti 1,2,zebra").exit_code == 2);
  CHECK(run_cli("betti 1,2,3 --backend fancy").exit_code == 2);
  CHECK(run_cli("bounds 7 --generic").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
}

TEST_CASE("budget overruns exit 3") {
  const RunResult naive = run_cli(
      "census 1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1 --backend naive");
  CHECK(naive.exit_code == 3);
  CHECK(run_cli("betti 1000000,1000000,1000000 --max-cells 10").exit_code == 3);
}

TEST_CASE("poincare command") {
  const json out = parse_output(run_cli("poincare 1,1,3,3,3"));
  CHECK(out["q"] == json({"1", "2", "1"}));
  CHECK(out["r"] == json({"0", "0", "0"}));
  CHECK(out["p"] == json({"2", "4", "2"}));
}

TEST_CASE("census command with both backends and prefix counts") {
  const json dp = parse_output(run_cli("census 1,1,1,1"));
  CHECK(dp["a"] == json({"1", "0"}));
  CHECK(dp["b"] == json({"0", "3"}));
  const json naive = parse_output(run_cli("census 1,1,1,1 --backend naive"));
  CHECK(naive["a"] == dp["a"]);

  const json prefix = parse_output(run_cli("census 1,1,1,1,1 --prefix 1"));
  CHECK(prefix["S"] == "5");
  CHECK(prefix["M"] == "0");
}

TEST_CASE("bounds command") {
  CHECK(parse_output(run_cli("bounds 5"))["bound"] == "10");
  CHECK(parse_output(run_cli("bounds 6 --generic"))["bound"] == "20");
  const json asym = parse_output(run_cli("bounds 5 --asymptotic"));
  const double est = asym["asymptotic_estimate"].get<double>();
  CHECK(est > 10.2);
  CHECK(est < 10.4);
}

TEST_CASE("morse command") {
  const json out = parse_output(run_cli("morse 1,1,1,9 --points"));
  CHECK(out["index_histogram"] == json({1, 3, 3, 1}));
  CHECK(out["pipeline_betti"] == json({"0", "0"}));
  CHECK(out["critical_points"] == 8);
  CHECK(out["points"].size() == 8);
  CHECK(out["points"][0]["mask"] == "f");
  CHECK(out["points"][0]["value"] == "-144");
}

TEST_CASE("verify command cross-checks and reports") {
  const json out = parse_output(run_cli("verify 3,2,2,1,1 --numeric"));
  CHECK(out["ok"] == true);
  CHECK(out["checks"]["pipeline_equals_formula"] == true);
  CHECK(out["checks"]["pairing_permutation"] == true);
  CHECK(out["checks"]["numeric_morse_index"] == true);
}

TEST_CASE("b0-oracle command agrees with the exact count") {
  const json out = parse_output(run_cli("b0-oracle 3,2,2,1,1 --samples 2000 --seed 7"));
  CHECK(out["components_estimate"] == 1);
  CHECK(out["component_count"] == 1);
  CHECK(out["match"] == true);
}

TEST_CASE("atlas sampling into a file merges without duplicates") {
  const std::string path = "/tmp/polyspace_cli_atlas.jsonl";
  std::remove(path.c_str());
  const json first =
      parse_output(run_cli("atlas-sample 4 --samples 3000 --seed 5 --seed-extremal --out " + path));
  CHECK(first["new_chambers"].get<int>() > 0);
  const int size = first["atlas_size"].get<int>();
  const json second =
      parse_output(run_cli("atlas-sample 4 --samples 3000 --seed 5 --seed-extremal --out " + path));
  CHECK(second["new_chambers"] == 0);
  CHECK(second["atlas_size"] == size);

  const json report = parse_output(run_cli("atlas-report --in " + path + " --n 4"));
  CHECK(report["bound"] == "5");
  CHECK(report["max_total"] == "5");
  CHECK(report["bound_generic"] == "4");
  CHECK(report["max_generic_total"] == "4");
  CHECK(report["violations"].empty());
  CHECK(report["generic_violations"].empty());
  std::remove(path.c_str());
}

TEST_CASE("atlas lines go to stdout without --out") {
  const RunResult r = run_cli("atlas-sample 4 --samples 200 --seed 5");
  CHECK(r.exit_code == 0);
  const auto newline = r.output.find('\n');
  REQUIRE(newline != std::string::npos);
  const json line = json::parse(r.output.substr(0, newline));
  CHECK(line["n"] == 4);
}

TEST_CASE("fingerprint command is scaling invariant") {
  const json a = parse_output(run_cli("fingerprint 3,2,2,1,1"));
  const json b = parse_output(run_cli("fingerprint 6,4,4,2,2"));
  CHECK(a["short_masks"] == b["short_masks"]);
  CHECK(a["median_masks"] == b["median_masks"]);
  CHECK(a["generic"] == true);
}

TEST_CASE("plain and csv renderings") {
  const RunResult plain = run_cli("betti 3,2,2,1,1 --plain");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output.find("betti: 1 4 1") != std::string::npos);
  CHECK(plain.output.find("total: 6") != std::string::npos);

  const RunResult csv = run_cli("bounds 6 --csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("field,index,value") != std::string::npos);
  CHECK(csv.output.find("bound,,22") != std::string::npos);

  const RunResult betti_csv = run_cli("betti 3,2,2,1,1 --csv");
  CHECK(betti_csv.output.find("betti,0,1") != std::string::npos);
  CHECK(betti_csv.output.find("betti,1,4") != std::string::npos);
}

TEST_CASE("identical invocations give identical output") {
  const RunResult a = run_cli("b0-oracle 1,1,3,3,3 --samples 300 --seed 11");
  const RunResult b = run_cli("b0-oracle 1,1,3,3,3 --samples 300 --seed 11");
  CHECK(a.output == b.output);
}

TEST_CASE("output does not depend on the worker count") {
  const std::string args = "atlas-sample 5 --samples 800 --seed 13";
  const RunResult one = run_cli(args, "POLYSPACE_THREADS=1 ");
  const RunResult four = run_cli(args, "POLYSPACE_THREADS=4 ");
  CHECK(one.exit_code == 0);
  CHECK(one.output == four.output);
  CHECK(one.output.find("\"n\":5") != std::string::npos);
}
