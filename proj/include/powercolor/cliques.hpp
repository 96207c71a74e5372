#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "powercolor/coloring.hpp"
#include "powercolor/graph.hpp"

namespace powercolor {

/// Sorted vertex list.
using Clique = std::vector<Vertex>;

/// All inclusion-maximal cliques, each sorted, listed in lexicographic order.
/// Bron-Kerbosch with Tomita pivoting over bitset neighborhoods; each call
/// is charged as one node expansion.
std::vector<Clique> maximal_cliques(const Graph& g, WorkBudget* budget = nullptr);

/// Every clique of exactly `k` vertices: the size-k subsets of maximal
/// cliques of size >= k, deduplicated and sorted.
std::vector<Clique> cliques_of_size(const Graph& g, std::size_t k,
                                    WorkBudget* budget = nullptr);

struct WeaklyCliquedResult {
  bool cliqued = true;
  std::size_t chi = 0;
  /// Least vertex lying in no chi-clique.
  std::optional<Vertex> uncovered;
};

/// Every vertex lies in a clique of size chi(g). DomainError on the empty graph.
WeaklyCliquedResult is_weakly_cliqued(const Graph& g, WorkBudget* budget = nullptr);

struct StronglyCliquedResult {
  bool cliqued = true;
  std::size_t chi = 0;
  std::optional<Vertex> isolated;
  /// Least edge (u < v) lying in no chi-clique.
  std::optional<Edge> uncovered_edge;
};

/// No isolated vertices and every edge lies in a clique of size chi(g).
/// DomainError on the empty graph.
StronglyCliquedResult is_strongly_cliqued(const Graph& g, WorkBudget* budget = nullptr);

/// The chi-cliques of a weakly cliqued graph grouped by clique-path
/// reachability (consecutive cliques share a vertex).
struct CliqueStructure {
  std::size_t k = 0;
  std::vector<Clique> cliques;
  /// Component index of each clique, numbered in order of first appearance.
  std::vector<std::size_t> clique_component;
  /// Component index of each vertex (total, since every vertex is covered).
  std::vector<std::size_t> vertex_component;
  std::size_t component_count = 0;

  friend bool operator==(const CliqueStructure&, const CliqueStructure&) = default;
};

/// NotWeaklyCliqued if some vertex lies in no chi-clique.
CliqueStructure clique_connected_components(const Graph& g,
                                            WorkBudget* budget = nullptr);

/// {"k": int, "cliques": [[v...]], "component": [int]}.
nlohmann::json to_json(const CliqueStructure& s);
CliqueStructure clique_structure_from_json(const nlohmann::json& j);

}  // namespace powercolor
