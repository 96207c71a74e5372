#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "powercolor/cli.hpp"

using namespace powercolor;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected = kExitOk) {
  args.insert(args.begin(), {"--format", "json"});
  auto r = run(args);
  REQUIRE(r.code == expected);
  return nlohmann::json::parse(r.out);
}

fs::path temp(const std::string& name) {
  auto p = fs::temp_directory_path() / ("powercolor_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove(p);
  return p;
}

}  // namespace

TEST_CASE("analyze prints predicates and the seed") {
  auto r = run({"--seed", "17", "analyze", "Bw"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("verdict: TriviallyPowerColorable") != std::string::npos);
  CHECK(r.out.find("seed: 17") != std::string::npos);

  auto c5 = run_json({"analyze", "Dhc"});
  CHECK(c5["predicates"]["chi"] == 3);
  CHECK(c5["predicates"]["tight"] == false);
  CHECK(c5["verdict"]["name"] == "Not(not-tight)");

  auto p4 = run_json({"analyze", "Ch"});
  CHECK(p4["predicates"]["is_cograph"] == false);
  CHECK(p4["verdict"]["reason"] == "chromatic_below_3");
}

TEST_CASE("verify reports counts per power") {
  auto k3 = run_json({"verify", "Bw", "--n", "2"});
  CHECK(k3["per_power"][1]["total_proper_colorings"] == "12");
  CHECK(k3["per_power"][1]["all_trivial"] == true);

  auto k2 = run_json({"verify", "A_", "--n", "3"});
  CHECK(k2["per_power"][1]["all_trivial"] == true);
  CHECK(k2["per_power"][2]["all_trivial"] == false);
  CHECK(k2["violations"].empty());

  auto capped = run_json({"--budget", "5000", "verify", "Bw", "--n", "9"});
  CHECK(capped["per_power"][0]["status"] == "verified");
  CHECK(capped["per_power"][8]["status"] == "budget_exceeded");
}

TEST_CASE("input formats and report files") {
  auto j = run_json({"--input-format", "json", "analyze", R"({"n":3,"edges":[[0,1],[1,2],[0,2]]})"});
  CHECK(j["graph"]["graph6"] == "Bw");

  auto gfile = temp("graph");
  std::ofstream(gfile) << "Bw\n";
  auto report = temp("report");
  auto r = run({"--out", report.string(), "analyze", gfile.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(report);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().find("TriviallyPowerColorable") != std::string::npos);
  fs::remove(gfile);
  fs::remove(report);
}

TEST_CASE("cograph subcommand") {
  auto k23 = run_json({"cograph", "Ds_"});
  CHECK(k23["cograph"] == true);
  CHECK(k23["equivalence"]["consistent"] == true);
  CHECK(k23["violations"].empty());
  auto p4 = run_json({"cograph", "Ch"});
  CHECK(p4["cograph"] == false);
  CHECK(p4["p4"].size() == 4);
  auto edgeless = run_json({"cograph", "A?"});
  CHECK(edgeless["violations"].empty());
}

TEST_CASE("ultrafilter subcommand") {
  auto j = run_json({"ultrafilter", "Bw", "--n", "3"});
  CHECK(j["violations"].empty());
  // Majority of three coordinates: proper on the cube of K_2 but trivial in none.
  auto majority = run_json({"ultrafilter", "A_", "--n", "3", "--coloring", "[0,0,0,1,0,1,1,1]"});
  CHECK(majority["trivial"] == false);
  CHECK(majority["violations"].empty());
  auto improper = run({"ultrafilter", "A_", "--n", "2", "--coloring", "[0,0,0,0]"});
  CHECK(improper.code == kExitError);
}

TEST_CASE("search resumes from its log") {
  auto log = temp("findings");
  auto first = run_json({"--out", log.string(), "search", "--max-vertices", "4", "--connected-only"});
  CHECK(first["violations"] == 0);
  CHECK(first["examined"] == 1 + 1 + 2 + 6);
  auto second = run_json({"--out", log.string(), "search", "--max-vertices", "4", "--connected-only"});
  CHECK(second["examined"] == 0);
  CHECK(second["resumed"] == 10);
  fs::remove(log);
}

TEST_CASE("exit codes") {
  CHECK(run({"analyze", "not a graph"}).code == kExitError);
  CHECK(run({"verify", "Bw", "--n", "0"}).code == kExitError);
  CHECK(run({"frobnicate"}).code == kExitError);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"--format", "xml", "analyze", "Bw"}).code == kExitError);
}
