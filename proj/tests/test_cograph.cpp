#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "powercolor/cograph.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/generate.hpp"

using namespace powercolor;

namespace {

bool is_path(const Graph& g, const std::array<Vertex, 4>& q) {
  return g.adjacent(q[0], q[1]) && g.adjacent(q[1], q[2]) && g.adjacent(q[2], q[3]) &&
         !g.adjacent(q[0], q[2]) && !g.adjacent(q[1], q[3]) && !g.adjacent(q[0], q[3]);
}

}  // namespace

TEST_CASE("P4 detection on named graphs") {
  CHECK(is_cograph_p4(complete_graph(5)).cograph);
  CHECK(is_cograph_p4(fixtures::k23()).cograph);
  CHECK(is_cograph_p4(fixtures::bowtie()).cograph);
  auto p4 = is_cograph_p4(path_graph(4));
  CHECK_FALSE(p4.cograph);
  REQUIRE(p4.p4);
  CHECK(*p4.p4 == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK_FALSE(is_cograph_p4(cycle_graph(5)).cograph);
  CHECK(is_cograph_p4(cycle_graph(4)).cograph);
}

TEST_CASE("P4 scan, cotree and the clique / independent set criterion agree") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n)) {
      auto p = is_cograph_p4(g);
      auto s = serial::is_cograph_p4(g);
      CHECK(p.cograph == !oracle::has_induced_p4(g));
      CHECK(p.cograph == s.cograph);
      CHECK(p.p4 == s.p4);
      if (p.p4) CHECK(is_path(g, *p.p4));
      CHECK(p.cograph == oracle::cliques_meet_independent_sets(g));
      bool built = true;
      try {
        auto t = build_cotree(g);
        CHECK(t.evaluate() == g);
        CHECK(replay_trace(t.trace(), g.order()) == g);
        CHECK(cotree_from_json(to_json(t)) == t);
      } catch (const NotACograph&) {
        built = false;
      }
      CHECK(built == p.cograph);
    }
}

TEST_CASE("cotree shape") {
  auto t = build_cotree(fixtures::k112());
  const auto& root = t.node(t.root());
  CHECK(root.kind == Cotree::Kind::join);
  CHECK(root.children.size() == 3);
  CHECK(t.vertex_count() == 4);
  // Children of a node alternate kinds.
  for (const auto& node : t.nodes())
    for (auto c : node.children)
      if (t.node(c).kind != Cotree::Kind::leaf) CHECK(t.node(c).kind != node.kind);
  auto single = build_cotree(empty_graph(1));
  CHECK(single.node(single.root()).kind == Cotree::Kind::leaf);
  CHECK_THROWS_AS(build_cotree(path_graph(4)), NotACograph);
}

TEST_CASE("construction trace uses only the three operations") {
  auto t = build_cotree(fixtures::k23());
  std::size_t singles = 0;
  for (const auto& step : t.trace()) {
    if (step.op == ConstructionStep::Op::single_vertex) ++singles;
    if (step.op == ConstructionStep::Op::complement) CHECK(step.operands.size() == 1);
    if (step.op == ConstructionStep::Op::disjoint_union) CHECK(step.operands.size() == 2);
  }
  CHECK(singles == 5);
}

TEST_CASE("cotree json rejects malformed trees") {
  CHECK_THROWS_AS(cotree_from_json(nlohmann::json::parse(R"({"op":"join","children":[{"op":"leaf","vertex":0}]})")),
                  ParseError);
  CHECK_THROWS_AS(cotree_from_json(nlohmann::json::parse(R"({"op":"tree"})")), ParseError);
}

TEST_CASE("tight coloring existence agrees with the oracle") {
  CHECK_FALSE(exists_tight_coloring(cycle_graph(5)).exists);
  auto k3 = exists_tight_coloring(complete_graph(3));
  CHECK(k3.exists);
  REQUIRE(k3.coloring);
  CHECK(is_tight_coloring(complete_graph(3), *k3.coloring).tight);
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n))
      CHECK(exists_tight_coloring(g).exists == oracle::exists_tight_coloring(g));
}

TEST_CASE("five-way equivalence on cographs") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n)) {
      if (!is_cograph_p4(g).cograph) {
        CHECK_THROWS_AS(equivalence_report(g), NotACograph);
        continue;
      }
      auto r = equivalence_report(g);
      CHECK(r.consistent());
      CHECK(r.tight == oracle::tight_graph(g));
      if (g.size() > 0) {
        CHECK(r.strongly_cliqued == r.tight);
      } else {
        CHECK(r.k == 1);
        CHECK_FALSE(r.strongly_cliqued);
        REQUIRE(r.isolated_vertex);
      }
      if (!r.tight) {
        REQUIRE(r.non_tight_coloring);
        REQUIRE(r.non_tight_recoloring);
        CHECK(is_proper(g, recolor(*r.non_tight_coloring, *r.non_tight_recoloring)));
        REQUIRE(r.small_maximal_clique);
        CHECK(r.small_maximal_clique->size() < r.k);
        REQUIRE(r.uncovered_vertex);
      } else {
        REQUIRE(r.tight_coloring);
      }
      auto j = to_json(r);
      CHECK(j["consistent"] == true);
    }
}

TEST_CASE("equivalence report witnesses for K3 + K1") {
  auto r = equivalence_report(fixtures::k3_plus_k1());
  CHECK(r.k == 3);
  CHECK_FALSE(r.tight);
  CHECK_FALSE(r.weakly_cliqued);
  CHECK(r.isolated_vertex == Vertex{3});
  CHECK(r.uncovered_vertex == Vertex{3});
  CHECK(r.small_maximal_clique == Clique{3});
}
