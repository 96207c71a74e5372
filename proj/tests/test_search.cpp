#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "fixtures.hpp"
#include "powercolor/generate.hpp"
#include "powercolor/graph_io.hpp"
#include "powercolor/search.hpp"

using namespace powercolor;
namespace fs = std::filesystem;

namespace {

struct TempFile {
  fs::path path;
  explicit TempFile(const std::string& name)
      : path(fs::temp_directory_path() / ("powercolor_" + name + "_" + std::to_string(::getpid()))) {
    fs::remove(path);
  }
  ~TempFile() { fs::remove(path); }
};

std::size_t line_count(const fs::path& p) {
  std::ifstream in(p);
  std::size_t n = 0;
  for (std::string line; std::getline(in, line);) n += !line.empty();
  return n;
}

}  // namespace

TEST_CASE("examine graph records predicates and verdicts") {
  auto k3 = examine_graph(complete_graph(3));
  CHECK(k3.graph6 == "Bw");
  CHECK(k3.n == 3);
  CHECK(k3.chi == 3u);
  CHECK(k3.verdict == "TriviallyPowerColorable");
  CHECK(k3.all_trivial == true);
  CHECK(k3.violations.empty());
  CHECK_FALSE(k3.open_zone());

  auto c5 = examine_graph(cycle_graph(5));
  CHECK(c5.verdict == "Not(not-tight)");
  CHECK(c5.all_trivial == false);
  REQUIRE(c5.nontrivial_witness);
  CHECK(c5.nontrivial_witness->size() == 25);

  auto p4 = examine_graph(path_graph(4));
  CHECK(p4.power == 3u);
  CHECK(p4.all_trivial == false);

  auto tiny = examine_graph(power(complete_graph(3), 2).product(), {2, 5, {}});
  CHECK(tiny.status == "budget_exceeded");
  CHECK(finding_from_json(to_json(c5)) == c5);
  CHECK(finding_from_json(to_json(tiny)) == tiny);
}

TEST_CASE("search over small connected graphs finds no violations") {
  const auto graphs = nonisomorphic_graphs_up_to(5, true);
  const auto s = counterexample_search(graphs);
  CHECK(s.findings.size() == graphs.size());
  CHECK(s.examined == graphs.size());
  CHECK(s.violations == 0);
  CHECK(s.errors == 0);
  CHECK(s.open_zone == 0);
}

TEST_CASE("findings log resumes and replays idempotently") {
  TempFile tmp("log");
  const auto graphs = nonisomorphic_graphs_up_to(4);
  const auto half = std::span<const Graph>(graphs).first(graphs.size() / 2);
  SearchSummary first;
  {
    FindingsLog log(tmp.path.string());
    first = counterexample_search(half, {}, &log);
    CHECK(log.size() == half.size());
  }
  CHECK(line_count(tmp.path) == half.size());

  SearchSummary full;
  {
    FindingsLog log(tmp.path.string());
    CHECK(log.size() == half.size());
    full = counterexample_search(graphs, {}, &log);
  }
  CHECK(full.resumed == half.size());
  CHECK(full.examined == graphs.size() - half.size());
  CHECK(line_count(tmp.path) == graphs.size());

  SearchSummary again;
  {
    FindingsLog log(tmp.path.string());
    again = counterexample_search(graphs, {}, &log);
  }
  CHECK(again.examined == 0);
  CHECK(again.resumed == graphs.size());
  CHECK(again.findings == full.findings);
  CHECK(line_count(tmp.path) == graphs.size());
  CHECK(FindingsLog::read(tmp.path.string()).size() == graphs.size());
}

TEST_CASE("findings log skips corrupt lines") {
  TempFile tmp("corrupt");
  {
    std::ofstream out(tmp.path);
    out << to_json(examine_graph(complete_graph(3))).dump() << "\n";
    out << "{not json\n";
    out << to_json(examine_graph(complete_graph(2))).dump();  // no trailing newline
  }
  FindingsLog log(tmp.path.string());
  CHECK(log.size() == 2);
  CHECK(log.skipped_lines() == 1);
  REQUIRE(log.find("Bw"));
  CHECK(log.find("Bw")->verdict == "TriviallyPowerColorable");
  log.append(examine_graph(path_graph(3)));
  std::size_t skipped = 0;
  CHECK(FindingsLog::read(tmp.path.string(), &skipped).size() == 3);
  CHECK(skipped == 1);
}
