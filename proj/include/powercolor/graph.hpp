#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace powercolor {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite simple undirected graph on the dense vertex set {0, ..., n-1}.
///
/// Adjacency is stored as sorted neighbor lists (CSR). Instances are
/// immutable once built and can be shared freely between threads.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
  /// and out-of-range endpoints raise DomainError. If `labels` is non-empty
  /// it must have exactly `n` entries.
  Graph(std::size_t n, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  /// Builds a graph directly from sorted, symmetric CSR arrays. Only checked
  /// in debug builds; used by constructors that already guarantee the format.
  static Graph from_csr(std::vector<std::size_t> offsets,
                        std::vector<Vertex> targets);

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return targets_.size() / 2; }
  bool empty() const { return order() == 0; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::string> label(Vertex v) const;

  /// Structural equality: same order and same edge set. Labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<std::string> labels_;
};

/// Size bounds applied when materializing products.
struct ProductLimits {
  std::size_t max_vertices = 10'000'000;
  std::size_t max_edges = 200'000'000;
};

/// A tensor product together with its factors and the coordinate encoding.
///
/// Product vertex ids are the mixed-radix encoding of coordinate tuples,
/// row-major over factor order: factor 0 is the most significant digit.
class ProductSpace {
 public:
  ProductSpace(Graph product, std::vector<Graph> factors);

  const Graph& product() const { return product_; }
  const std::vector<Graph>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  const Graph& factor(std::size_t i) const { return factors_[i]; }

  /// Coordinate `i` of product vertex `v`.
  Vertex coordinate(Vertex v, std::size_t i) const {
    return static_cast<Vertex>((v / strides_[i]) % radices_[i]);
  }
  std::vector<Vertex> decode(Vertex v) const;
  Vertex encode(std::span<const Vertex> coordinates) const;

  std::span<const std::size_t> radices() const { return radices_; }
  std::span<const std::size_t> strides() const { return strides_; }

  /// True when every factor is the same graph (a power G^n).
  bool is_power() const;

 private:
  Graph product_;
  std::vector<Graph> factors_;
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> strides_;
};

/// Tensor (categorical) product of an ordered list of factors. Raises
/// CapacityError when the result would exceed `limits`.
ProductSpace tensor_product(std::span<const Graph> factors,
                            const ProductLimits& limits = {});
ProductSpace tensor_product(const Graph& g, const Graph& h,
                            const ProductLimits& limits = {});

/// G^n for n >= 1.
ProductSpace power(const Graph& g, std::size_t n,
                   const ProductLimits& limits = {});

namespace serial {
// Single-threaded reference for the product construction.
ProductSpace tensor_product(std::span<const Graph> factors,
                            const ProductLimits& limits = {});
}  // namespace serial

/// Reachability classes. Blocks are sorted and ordered by minimum vertex.
struct Components {
  std::vector<std::size_t> component_of;
  std::vector<std::vector<Vertex>> blocks;

  std::size_t count() const { return blocks.size(); }
};

Components connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Induced subgraph on a vertex subset. Vertex `i` of `graph` corresponds to
/// `original[i]` of the source graph; `original` is sorted ascending.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

// Named families.
Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_multipartite(std::span<const std::size_t> parts);

}  // namespace powercolor
