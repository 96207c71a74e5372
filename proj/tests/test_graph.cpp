#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/generate.hpp"
#include "powercolor/graph.hpp"
#include "powercolor/graph_io.hpp"

using namespace powercolor;

namespace {

std::vector<Edge> sorted_edges(const Graph& g) {
  auto e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

}  // namespace

TEST_CASE("graph construction normalizes edges") {
  const std::vector<Edge> edges = {{2, 0}, {0, 1}, {1, 0}};
  Graph g(3, edges);
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(g.degree(0) == 2);
}

TEST_CASE("graph rejects loops and out-of-range endpoints") {
  const std::vector<Edge> loop = {{1, 1}};
  CHECK_THROWS_AS(Graph(2, loop), DomainError);
  const std::vector<Edge> far = {{0, 5}};
  CHECK_THROWS_AS(Graph(2, far), DomainError);
}

TEST_CASE("named families") {
  CHECK(complete_graph(4).size() == 6);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(path_graph(4).size() == 3);
  CHECK(empty_graph(3).size() == 0);
  CHECK(fixtures::k112().size() == 5);
  CHECK(fixtures::k23().size() == 6);
}

TEST_CASE("tensor product edges match the definition") {
  const Graph cases[][2] = {
      {cycle_graph(5), complete_graph(3)},
      {fixtures::bowtie(), complete_graph(3)},
      {path_graph(4), fixtures::k112()},
      {empty_graph(2), complete_graph(3)},
  };
  for (const auto& [g, h] : cases) {
    auto ps = tensor_product(g, h);
    auto expected = oracle::product_edges(g, h);
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_edges(ps.product()) == expected);
  }
  CHECK(tensor_product(cycle_graph(5), complete_graph(3)).product().size() == 30);
  CHECK(power(complete_graph(3), 2).product().size() == 18);
}

TEST_CASE("product coordinates round trip") {
  const Graph f[] = {complete_graph(3), path_graph(2), cycle_graph(4)};
  auto ps = tensor_product(f);
  CHECK(ps.product().order() == 24);
  CHECK_FALSE(ps.is_power());
  CHECK(power(complete_graph(3), 3).is_power());
  for (Vertex v = 0; v < 24; ++v) {
    auto c = ps.decode(v);
    CHECK(ps.encode(c) == v);
    for (std::size_t i = 0; i < 3; ++i) CHECK(ps.coordinate(v, i) == c[i]);
  }
  // Factor 0 is the most significant digit.
  const Vertex coords[] = {1, 0, 2};
  CHECK(ps.encode(coords) == 1 * 8 + 0 * 4 + 2);
}

TEST_CASE("tensor product is commutative and associative up to coordinate permutation") {
  const Graph a = fixtures::bowtie(), b = complete_graph(3), c = path_graph(3);
  auto ab = tensor_product(a, b), ba = tensor_product(b, a);
  for (auto [x, y] : ab.product().edges()) {
    auto cx = ab.decode(x), cy = ab.decode(y);
    const Vertex sx[] = {cx[1], cx[0]}, sy[] = {cy[1], cy[0]};
    CHECK(ba.product().adjacent(ba.encode(sx), ba.encode(sy)));
  }
  CHECK(ab.product().size() == ba.product().size());

  const Graph three[] = {a, b, c};
  auto flat = tensor_product(three);
  auto nested = tensor_product(tensor_product(a, b).product(), c);
  CHECK(flat.product() == nested.product());
}

TEST_CASE("parallel and serial products agree") {
  for (const auto& g : nonisomorphic_graphs(4)) {
    const Graph f[] = {g, fixtures::bowtie(), complete_graph(2)};
    CHECK(tensor_product(f).product() == serial::tensor_product(f).product());
  }
}

TEST_CASE("product limits raise capacity errors") {
  ProductLimits tiny{.max_vertices = 50, .max_edges = 1000};
  CHECK_THROWS_AS(power(complete_graph(3), 4, tiny), CapacityError);
  ProductLimits few_edges{.max_vertices = 1000, .max_edges = 10};
  CHECK_THROWS_AS(power(complete_graph(3), 2, few_edges), CapacityError);
}

TEST_CASE("components agree with union-find") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& g : nonisomorphic_graphs(n)) {
      auto comp = connected_components(g);
      CHECK(comp.count() == oracle::components(g));
      CHECK(is_connected(g) == (comp.count() == 1));
      for (auto [u, v] : g.edges()) CHECK(comp.component_of[u] == comp.component_of[v]);
    }
}

TEST_CASE("complement is an involution and disjoint union adds counts") {
  for (const auto& g : nonisomorphic_graphs(5)) {
    CHECK(complement(complement(g)) == g);
    CHECK(complement(g).size() == 10 - g.size());
    auto u = disjoint_union(g, fixtures::bowtie());
    CHECK(u.order() == 10);
    CHECK(u.size() == g.size() + 6);
    CHECK(connected_components(u).count() == oracle::components(g) + 1);
  }
}

TEST_CASE("induced subgraph keeps the original labels") {
  const Vertex keep[] = {1, 2, 3};
  auto s = induced_subgraph(fixtures::bowtie(), keep);
  CHECK(s.graph.order() == 3);
  CHECK(s.graph.size() == 2);
  CHECK(s.original == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("graph6 round trip") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(parse_graph6("Bw") == complete_graph(3));
  for (std::size_t n = 0; n <= 6; ++n)
    for (const auto& g : nonisomorphic_graphs(n)) CHECK(parse_graph6(to_graph6(g)) == g);
  auto big = cycle_graph(70);
  CHECK(parse_graph6(to_graph6(big)) == big);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError);
}

TEST_CASE("json round trip and format detection") {
  auto g = fixtures::bowtie();
  CHECK(graph_from_json(graph_to_json(g)) == g);
  CHECK(parse_graph(graph_to_json(g).dump()) == g);
  CHECK(parse_graph("Bw") == complete_graph(3));
  CHECK(parse_graph("  Bw\n", GraphFormat::graph6) == complete_graph(3));
  CHECK_THROWS_AS(parse_graph("{\"n\": 2, \"edges\": [[0, 7]]}", GraphFormat::json), Error);
  CHECK_THROWS_AS(parse_graph("{nope", GraphFormat::json), ParseError);
  auto pj = product_to_json(power(complete_graph(2), 2));
  CHECK(pj.is_object());
}
