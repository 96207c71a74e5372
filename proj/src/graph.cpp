#include "powercolor/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <queue>

#include "powercolor/errors.hpp"

namespace powercolor {

Graph::Graph(std::size_t n, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n)
    throw DomainError("label count " + std::to_string(labels_.size()) +
                      " does not match vertex count " + std::to_string(n));
  std::vector<std::vector<Vertex>> lists(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") references a vertex outside 0.." +
                        std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    lists[u].push_back(v);
    lists[v].push_back(u);
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    offsets_[v + 1] = offsets_[v] + l.size();
  }
  targets_.reserve(offsets_[n]);
  for (auto& l : lists) targets_.insert(targets_.end(), l.begin(), l.end());
}

Graph Graph::from_csr(std::vector<std::size_t> offsets,
                      std::vector<Vertex> targets) {
  Graph g;
  if (offsets.empty()) offsets.push_back(0);
  assert(offsets.back() == targets.size());
  g.offsets_ = std::move(offsets);
  g.targets_ = std::move(targets);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::optional<std::string> Graph::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::nullopt;
}

ProductSpace::ProductSpace(Graph product, std::vector<Graph> factors)
    : product_(std::move(product)), factors_(std::move(factors)) {
  radices_.resize(factors_.size());
  strides_.resize(factors_.size());
  std::size_t stride = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    radices_[i] = factors_[i].order();
    strides_[i] = stride;
    stride *= std::max<std::size_t>(radices_[i], 1);
  }
}

std::vector<Vertex> ProductSpace::decode(Vertex v) const {
  std::vector<Vertex> out(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) out[i] = coordinate(v, i);
  return out;
}

Vertex ProductSpace::encode(std::span<const Vertex> coordinates) const {
  if (coordinates.size() != factors_.size())
    throw DomainError("coordinate tuple has " +
                      std::to_string(coordinates.size()) + " entries, expected " +
                      std::to_string(factors_.size()));
  std::size_t v = 0;
  for (std::size_t i = 0; i < coordinates.size(); ++i) {
    if (coordinates[i] >= radices_[i])
      throw DomainError("coordinate " + std::to_string(i) + " out of range");
    v += coordinates[i] * strides_[i];
  }
  return static_cast<Vertex>(v);
}

bool ProductSpace::is_power() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const Graph& f) { return f == factors_.front(); });
}

namespace {

struct ProductShape {
  std::size_t vertices = 1;
  std::size_t edges = 0;
  std::vector<std::size_t> strides;
};

ProductShape check_shape(std::span<const Graph> factors,
                         const ProductLimits& limits) {
  if (factors.empty()) throw DomainError("a product needs at least one factor");
  ProductShape shape;
  double vertices = 1.0;
  double arcs = 1.0;
  for (const auto& f : factors) {
    vertices *= static_cast<double>(f.order());
    arcs *= 2.0 * static_cast<double>(f.size());
  }
  if (vertices > static_cast<double>(limits.max_vertices))
    throw CapacityError("product would have " + std::to_string(vertices) +
                        " vertices, bound is " +
                        std::to_string(limits.max_vertices));
  if (arcs / 2.0 > static_cast<double>(limits.max_edges))
    throw CapacityError("product would have " + std::to_string(arcs / 2.0) +
                        " edges, bound is " + std::to_string(limits.max_edges));
  shape.strides.resize(factors.size());
  std::size_t arcs_exact = 1;
  for (std::size_t i = factors.size(); i-- > 0;) {
    shape.strides[i] = shape.vertices;
    shape.vertices *= factors[i].order();
    arcs_exact *= 2 * factors[i].size();
  }
  shape.edges = arcs_exact / 2;
  return shape;
}

// Writes the neighbors of product vertex `v` in ascending order into `out`.
// Iterates the Cartesian product of factor neighbor lists as an odometer;
// lexicographic index order is ascending id order because factor 0 is the
// most significant digit and every neighbor list is sorted.
void fill_neighbors(std::span<const Graph> factors,
                    std::span<const std::size_t> strides, std::size_t v,
                    Vertex* out, std::vector<std::span<const Vertex>>& lists,
                    std::vector<std::size_t>& idx) {
  const std::size_t m = factors.size();
  for (std::size_t i = 0; i < m; ++i) {
    auto coord = static_cast<Vertex>((v / strides[i]) % factors[i].order());
    lists[i] = factors[i].neighbors(coord);
    if (lists[i].empty()) return;
    idx[i] = 0;
  }
  while (true) {
    std::size_t id = 0;
    for (std::size_t i = 0; i < m; ++i) id += lists[i][idx[i]] * strides[i];
    *out++ = static_cast<Vertex>(id);
    std::size_t i = m;
    while (i-- > 0) {
      if (++idx[i] < lists[i].size()) break;
      idx[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) return;
  }
}

std::size_t product_degree(std::span<const Graph> factors,
                           std::span<const std::size_t> strides, std::size_t v) {
  std::size_t d = 1;
  for (std::size_t i = 0; i < factors.size(); ++i)
    d *= factors[i].degree(
        static_cast<Vertex>((v / strides[i]) % factors[i].order()));
  return d;
}

template <bool Parallel>
ProductSpace build_product(std::span<const Graph> factors,
                           const ProductLimits& limits) {
  const ProductShape shape = check_shape(factors, limits);
  const auto n = static_cast<std::int64_t>(shape.vertices);
  std::vector<std::size_t> offsets(shape.vertices + 1, 0);

#pragma omp parallel for schedule(static) if (Parallel)
  for (std::int64_t v = 0; v < n; ++v)
    offsets[v + 1] = product_degree(factors, shape.strides, v);
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  std::vector<Vertex> targets(offsets.back());
#pragma omp parallel if (Parallel)
  {
    std::vector<std::span<const Vertex>> lists(factors.size());
    std::vector<std::size_t> idx(factors.size());
#pragma omp for schedule(static)
    for (std::int64_t v = 0; v < n; ++v)
      fill_neighbors(factors, shape.strides, v, targets.data() + offsets[v],
                     lists, idx);
  }
  return ProductSpace(Graph::from_csr(std::move(offsets), std::move(targets)),
                      std::vector<Graph>(factors.begin(), factors.end()));
}

}  // namespace

ProductSpace tensor_product(std::span<const Graph> factors,
                            const ProductLimits& limits) {
  return build_product<true>(factors, limits);
}

ProductSpace tensor_product(const Graph& g, const Graph& h,
                            const ProductLimits& limits) {
  const Graph pair[] = {g, h};
  return tensor_product(pair, limits);
}

ProductSpace power(const Graph& g, std::size_t n, const ProductLimits& limits) {
  if (n == 0) throw DomainError("power exponent must be at least 1");
  std::vector<Graph> factors(n, g);
  return tensor_product(factors, limits);
}

namespace serial {
ProductSpace tensor_product(std::span<const Graph> factors,
                            const ProductLimits& limits) {
  return build_product<false>(factors, limits);
}
}  // namespace serial

Components connected_components(const Graph& g) {
  constexpr auto unseen = static_cast<std::size_t>(-1);
  Components out;
  out.component_of.assign(g.order(), unseen);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (out.component_of[s] != unseen) continue;
    const std::size_t id = out.blocks.size();
    queue.assign(1, s);
    out.component_of[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (Vertex w : g.neighbors(queue[head]))
        if (out.component_of[w] == unseen) {
          out.component_of[w] = id;
          queue.push_back(w);
        }
    std::sort(queue.begin(), queue.end());
    out.blocks.push_back(queue);
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).count() <= 1; }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    auto it = nbrs.begin();
    for (Vertex v = u + 1; v < n; ++v) {
      while (it != nbrs.end() && *it < v) ++it;
      if (it == nbrs.end() || *it != v) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges, g.labels());
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  auto edges = g.edges();
  const auto shift = static_cast<Vertex>(g.order());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  std::vector<std::string> labels;
  if (!g.labels().empty() && !h.labels().empty()) {
    labels = g.labels();
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());
  }
  return Graph(g.order() + h.order(), edges, std::move(labels));
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  InducedSubgraph out;
  out.original.assign(subset.begin(), subset.end());
  std::sort(out.original.begin(), out.original.end());
  out.original.erase(std::unique(out.original.begin(), out.original.end()),
                     out.original.end());
  constexpr auto absent = static_cast<Vertex>(-1);
  std::vector<Vertex> local(g.order(), absent);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    if (out.original[i] >= g.order())
      throw DomainError("vertex " + std::to_string(out.original[i]) +
                        " is not in the graph");
    local[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    Vertex u = out.original[i];
    for (Vertex w : g.neighbors(u))
      if (local[w] != absent && local[w] > i)
        edges.emplace_back(static_cast<Vertex>(i), local[w]);
    if (!g.labels().empty()) labels.push_back(g.labels()[u]);
  }
  out.graph = Graph(out.original.size(), edges, std::move(labels));
  return out;
}

Graph empty_graph(std::size_t n) { return Graph(n, {}); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    edges.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Graph(n, edges);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p)
    part_of.insert(part_of.end(), parts[p], p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < part_of.size(); ++u)
    for (Vertex v = u + 1; v < part_of.size(); ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph(part_of.size(), edges);
}

}  // namespace powercolor
