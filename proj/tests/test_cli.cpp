#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "ttpack/report.hpp"

using ttpack::Json;
namespace cli = ttpack::cli;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = cli::dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Json run_json(const std::vector<std::string>& args, int expected_code = cli::kSuccess) {
  const auto r = run(args);
  INFO("stderr: " << r.err);
  REQUIRE(r.code == expected_code);
  const auto j = Json::parse(r.out);
  CHECK(ttpack::report_schema_violation(j) == "");
  return j;
}

std::string data(const std::string& name) { return std::string(TTPACK_DATA_DIR) + "/" + name; }

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ttpack_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("ramsey verify g(3)") {
  const auto j = run_json({"ramsey", "verify", "--quantity", "g", "--k", "3"});
  CHECK(j["command"] == "ramsey verify");
  CHECK(j["result"]["value"] == 6);
  CHECK(j["result"]["certified"] == true);
}

TEST_CASE("pack on the cyclic triangle") {
  const auto j = run_json({"pack", "--pattern", "ttk:3", "--input", data("cyclic_triangle.txt")});
  CHECK(j["result"]["lower"] == 0);
  CHECK(j["result"]["upper"] == 0);
  CHECK(j["result"]["optimal"] == true);
}

TEST_CASE("tight cover with seed 7") {
  const auto j = run_json({"cover", "--k", "4", "--t", "3", "--tight", "--seed", "7"});
  CHECK(j["result"]["uncovered_count"].get<int>() <= 4);
  CHECK(j["result"]["valid"] == true);
}

TEST_CASE("every command is deterministic apart from timing") {
  const std::vector<std::vector<std::string>> commands = {
      {"ramsey", "verify", "--quantity", "fstar", "--k", "3"},
      {"ramsey", "find-free", "--k", "4", "--n", "7", "--seed", "3"},
      {"ramsey", "table", "--which", "tt3-factor-6"},
      {"enumerate", "--n", "5", "--codes"},
      {"cover", "--k", "3", "--t", "4", "--seed", "11"},
      {"embed", "--h", "2", "--k", "2", "--w", "300", "--eta", "1", "--mu", "1/500", "--p", "0.8", "--seed", "2"},
      {"pack", "--tournament", "12", "--seed", "5", "--mode", "greedy"},
      {"construct", "--which", "star", "--params", "m=2,h=4,alpha=1/2"},
      {"factor", "--input", data("cyclic_triangle.txt"), "--pattern", "ttk:3"},
  };
  for (const auto& args : commands) {
    CAPTURE(args.front());
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == b.code);
    auto ja = Json::parse(a.out);
    auto jb = Json::parse(b.out);
    CHECK(ttpack::report_schema_violation(ja) == "");
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja.dump() == jb.dump());
  }
}

TEST_CASE("job count does not change enumeration output") {
  auto a = run_json({"--jobs", "1", "enumerate", "--n", "6", "--codes"});
  auto b = run_json({"--jobs", "3", "enumerate", "--n", "6", "--codes"});
  CHECK(a["result"] == b["result"]);
  CHECK(a["result"]["classes"] == 56);
}

TEST_CASE("input digest covers parameters and input bytes") {
  const auto a = run_json({"pack", "--input", data("cyclic_triangle.txt")});
  const auto b = run_json({"pack", "--input", data("prop2_mini.txt")});
  const auto c = run_json({"pack", "--input", data("cyclic_triangle.txt"), "--mode", "greedy"});
  CHECK(a["input_digest"] != b["input_digest"]);
  CHECK(a["input_digest"] != c["input_digest"]);
}

TEST_CASE("construct then verify-construction") {
  const auto path = temp_path("prop2.json");
  REQUIRE(run({"construct", "--which", "prop2", "--params", "n=60,gamma=1/60", "--out", path}).code == 0);
  const auto j = run_json({"verify-construction", "--input", path});
  CHECK(j["result"]["ok"] == true);
  CHECK(j["result"]["structural_bound"] == 19);
  CHECK(j["result"]["min_degree"] == 49);
  std::remove(path.c_str());

  const auto shipped = run_json({"verify-construction", "--input", data("prop2_n60.json")});
  CHECK(shipped["result"]["ok"] == true);
}

TEST_CASE("factor command") {
  const auto j = run_json({"factor", "--input", data("cyclic_triangle.txt"), "--pattern", "ttk:3"}, cli::kNegative);
  CHECK(j["result"]["found"] == false);
  CHECK(run({"factor", "--input", data("prop2_mini.txt"), "--pattern", "ttk:2", "--method", "matching"}).code ==
        cli::kUsage);
}

TEST_CASE("text format and output file") {
  const auto path = temp_path("table.txt");
  REQUIRE(run({"ramsey", "table", "--which", "tt4-free-7", "--format", "text", "--out", path}).code == 0);
  CHECK(slurp(path) == slurp(data("tt4_free_7.txt")));
  std::remove(path.c_str());
}

TEST_CASE("manifest records tables and digests") {
  const auto path = temp_path("manifest.json");
  const auto r = run({"--manifest", path, "pack", "--tournament", "9", "--seed", "4"});
  REQUIRE(r.code == 0);
  const auto m = Json::parse(slurp(path));
  CHECK(m["seed"] == 4);
  CHECK(m["tables"]["tt4-free-7"] == "7:0000000000014d32");
  CHECK(m["input_digest"] == Json::parse(r.out)["input_digest"]);
  CHECK(m["output_digest"].get<std::string>().size() == 64);
  const auto again = run({"--manifest", path, "pack", "--tournament", "9", "--seed", "4"});
  CHECK(Json::parse(slurp(path))["output_digest"] == m["output_digest"]);
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"pack", "--no-such-flag"}).code == cli::kUsage);
  CHECK(run({"--format", "xml", "pack"}).code == cli::kUsage);
  CHECK(run({"pack", "--input", "/nonexistent/graph.txt"}).code == cli::kUsage);
  CHECK(run({"pack", "--pattern", "cycle:3", "--tournament", "5"}).code == cli::kUsage);
  CHECK(run({"cover", "--k", "3", "--r", "7"}).code == cli::kUsage);
  CHECK(run({"construct", "--which", "nothing"}).code == cli::kUsage);
}

TEST_CASE("budget exhaustion exits with 3") {
  const auto r = run({"--budget", "2", "pack", "--pattern", "ttk:4", "--tournament", "40", "--seed", "1"});
  CHECK(r.code == cli::kBudget);
  const auto j = Json::parse(r.out);
  CHECK(j["result"]["optimal"] == false);
  CHECK(j["result"]["lower"].get<int>() <= j["result"]["upper"].get<int>());

  const auto f = run({"ramsey", "find-free", "--k", "4", "--n", "8", "--restarts", "1", "--flips", "100"});
  CHECK(f.code == cli::kBudget);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == cli::kSuccess);
  CHECK(run({"embed", "--help"}).code == cli::kSuccess);
}
