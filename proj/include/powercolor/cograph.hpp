#pragma once

#include <array>
#include <optional>
#include <vector>

#include <json.hpp>

#include "powercolor/cliques.hpp"
#include "powercolor/coloring.hpp"
#include "powercolor/graph.hpp"

namespace powercolor {

struct P4Check {
  bool cograph = true;
  /// Lexicographically least 4-subset inducing a path, listed in path order.
  std::optional<std::array<Vertex, 4>> p4;
};

/// Brute-force scan of all 4-subsets for an induced P4. The outer index is
/// distributed over OpenMP threads.
P4Check is_cograph_p4(const Graph& g);

namespace serial {
P4Check is_cograph_p4(const Graph& g);
}  // namespace serial

/// One literal construction step: a single vertex, the complement of an
/// earlier step, or the disjoint union of two earlier steps. Step indices
/// refer to positions in the trace.
struct ConstructionStep {
  enum class Op { single_vertex, complement, disjoint_union };
  Op op = Op::single_vertex;
  Vertex vertex = 0;
  std::vector<std::size_t> operands;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

/// Union/join decomposition tree. Leaves carry source vertex ids; children
/// of each internal node are ordered by their minimum vertex, and no child
/// shares its parent's tag.
class Cotree {
 public:
  enum class Kind { leaf, disjoint_union, join };

  struct Node {
    Kind kind = Kind::leaf;
    Vertex vertex = 0;
    std::vector<std::size_t> children;
    friend bool operator==(const Node&, const Node&) = default;
  };

  Cotree() = default;
  Cotree(std::vector<Node> nodes, std::size_t root, std::size_t vertex_count);

  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  std::size_t root() const { return root_; }
  std::size_t vertex_count() const { return vertex_count_; }

  /// Rebuilds the graph: union is disjoint union, join adds every edge
  /// between different children.
  Graph evaluate() const;

  /// The tree as a sequence of single-vertex / complement / union steps;
  /// a join is the complement of the union of the complemented children.
  std::vector<ConstructionStep> trace() const;

  friend bool operator==(const Cotree&, const Cotree&) = default;

 private:
  std::vector<Node> nodes_;
  std::size_t root_ = 0;
  std::size_t vertex_count_ = 0;
};

/// Executes a construction trace with the literal graph operations and
/// returns the final graph on the source vertex ids. `vertex_count` is the
/// order of the source graph.
Graph replay_trace(const std::vector<ConstructionStep>& trace, std::size_t vertex_count);

/// Recursive decomposition: components if disconnected, co-components if
/// the complement is disconnected, a leaf for one vertex. NotACograph
/// otherwise; DomainError on the empty graph.
Cotree build_cotree(const Graph& g);

/// Nested {"op": "leaf", "vertex": v} / {"op": "union"|"join", "children": [...]}.
nlohmann::json to_json(const Cotree& t);
Cotree cotree_from_json(const nlohmann::json& j);

struct TightColoringSearch {
  bool exists = false;
  std::optional<Coloring> coloring;
};

/// Whether some proper chi(g)-coloring is tight. DomainError on the empty graph.
TightColoringSearch exists_tight_coloring(const Graph& g, WorkBudget* budget = nullptr);

/// The five statements that coincide on cographs, each computed from its own
/// definition, with a witness for every false entry.
struct EquivalenceReport {
  std::size_t k = 0;
  bool tight = false;
  bool exists_tight_coloring = false;
  bool all_maximal_cliques_size_k = false;
  bool strongly_cliqued = false;
  bool weakly_cliqued = false;

  std::optional<Coloring> non_tight_coloring;
  std::optional<Recoloring> non_tight_recoloring;
  std::optional<Coloring> tight_coloring;
  std::optional<Clique> small_maximal_clique;
  std::optional<Vertex> isolated_vertex;
  std::optional<Edge> uncovered_edge;
  std::optional<Vertex> uncovered_vertex;

  /// All five booleans agree. False on a cograph means a library defect.
  /// With k = 1 the graph is edgeless and every vertex is isolated, so
  /// strong cliquedness fails by definition and is left out of the comparison.
  bool consistent() const;
};

/// NotACograph if `g` contains an induced P4; DomainError on the empty graph.
EquivalenceReport equivalence_report(const Graph& g, WorkBudget* budget = nullptr);

nlohmann::json to_json(const EquivalenceReport& r);

}  // namespace powercolor
