#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracle.hpp"
#include "powercolor/errors.hpp"
#include "powercolor/generate.hpp"
#include "powercolor/graph_io.hpp"

using namespace powercolor;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(p[u], p[v]);
  return Graph(g.order(), e);
}

}  // namespace

TEST_CASE("class counts") {
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto gs = nonisomorphic_graphs(n);
    CHECK(gs.size() == all[n]);
    std::size_t c = 0;
    for (const auto& g : gs) c += n == 0 || is_connected(g);
    CHECK(c == connected[n]);
  }
  CHECK(nonisomorphic_graphs_up_to(5).size() == 1 + 2 + 4 + 11 + 34);
  CHECK(nonisomorphic_graphs_up_to(5, true).size() == 1 + 1 + 2 + 6 + 21);
  CHECK_THROWS_AS(nonisomorphic_graphs(kMaxExhaustiveOrder + 1), DomainError);
}

TEST_CASE("generator matches brute-force isomorphism classes") {
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto gs = nonisomorphic_graphs(n);
    const auto reps = oracle::iso_classes(n);
    REQUIRE(gs.size() == reps.size());
    for (const auto& r : reps) {
      std::size_t hits = 0;
      for (const auto& g : gs) hits += oracle::isomorphic(g, r);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("serial and parallel generation agree") {
  for (std::size_t n = 0; n <= 7; ++n) CHECK(nonisomorphic_graphs(n) == serial::nonisomorphic_graphs(n));
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(7);
  for (const auto& g : nonisomorphic_graphs(6)) {
    std::vector<Vertex> p(6);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const auto h = relabel(g, p);
    CHECK(canonical_graph6(h) == canonical_graph6(g));
    CHECK(canonical_form(h) == canonical_form(g));
    CHECK(oracle::isomorphic(canonical_form(g), g));
    CHECK(to_graph6(g) == canonical_graph6(g));
  }
}

TEST_CASE("random graphs are reproducible") {
  const auto a = random_graphs(12, 5, 42);
  const auto b = random_graphs(12, 5, 42);
  const auto c = random_graphs(12, 5, 43);
  CHECK(a == b);
  CHECK(a != c);
  for (const auto& g : a) CHECK(g.order() == 12);
  CHECK(random_graphs(6, 3, 1, 0.0)[0].size() == 0);
  CHECK(random_graphs(6, 3, 1, 1.0)[0].size() == 15);
}
