#include <doctest.h>

#include "fixtures.hpp"
#include "powercolor/cliques.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/report.hpp"

using namespace powercolor;

TEST_CASE("analysis of K3") {
  auto r = analyze_graph(complete_graph(3), 2, 1'000'000, 9);
  CHECK(r.graph6 == "Bw");
  CHECK(r.chi == 3u);
  CHECK(r.tight == true);
  CHECK(r.weakly_cliqued == true);
  CHECK(r.strongly_cliqued == true);
  CHECK(r.clique_components == 1u);
  CHECK(r.is_cograph);
  CHECK(r.verdict.kind == VerdictKind::trivially_power_colorable);
  REQUIRE(r.per_power.size() == 2);
  CHECK(r.per_power[1].total_proper_colorings == 12);
  CHECK(r.status == "ok");
  CHECK(r.seed == 9);
  CHECK(r.budget_used > 0);
}

TEST_CASE("analysis reports exhausted budgets") {
  auto r = analyze_graph(power(complete_graph(3), 2).product(), 2, 5);
  CHECK(r.status == "budget_exceeded");
  CHECK(r.verdict.reason == VerdictReason::budget_exceeded);
  CHECK_THROWS_AS(analyze_graph(empty_graph(0), 1, 100), DomainError);
}

TEST_CASE("report json round trips") {
  const Graph graphs[] = {complete_graph(3), cycle_graph(5), path_graph(4), fixtures::k3_plus_k1(),
                          empty_graph(2)};
  for (const auto& g : graphs) {
    auto r = analyze_graph(g, 2, 10'000'000);
    CHECK(analysis_report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
    auto p = verify_power_triviality(g, 2);
    CHECK(power_report_from_json(to_json(p)) == p);
    CHECK(verdict_from_json(to_json(p.verdict)) == p.verdict);
  }
  CHECK_THROWS_AS(verdict_from_json(nlohmann::json::parse(R"({"kind":"maybe"})")), ParseError);
  CHECK(clique_structure_from_json(to_json(clique_connected_components(fixtures::bowtie()))) ==
        clique_connected_components(fixtures::bowtie()));
}
