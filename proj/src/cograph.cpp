#include "powercolor/cograph.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "powercolor/errors.hpp"
#include "powercolor/vertex_set.hpp"

namespace powercolor {

namespace {

using Quad = std::array<Vertex, 4>;

// If {a, b, c, d} induces a P4, returns it in path order.
std::optional<Quad> induced_p4(const std::vector<VertexSet>& rows, Quad q) {
  int degree[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (rows[q[i]].contains(q[j])) {
        ++degree[i];
        ++degree[j];
        ++edges;
      }
  if (edges != 3) return std::nullopt;
  int leaves = 0;
  int start = -1;
  for (int i = 0; i < 4; ++i) {
    if (degree[i] == 3 || degree[i] == 0) return std::nullopt;
    if (degree[i] == 1) {
      ++leaves;
      if (start < 0) start = i;
    }
  }
  if (leaves != 2) return std::nullopt;
  Quad path{};
  bool used[4] = {false, false, false, false};
  int cur = start;
  for (int step = 0; step < 4; ++step) {
    path[step] = q[cur];
    used[cur] = true;
    for (int j = 0; j < 4; ++j)
      if (!used[j] && rows[q[cur]].contains(q[j])) {
        cur = j;
        break;
      }
  }
  return path;
}

// Least P4 whose smallest vertex is `a`.
std::optional<Quad> scan_from(const std::vector<VertexSet>& rows, Vertex a, std::size_t n) {
  for (Vertex b = a + 1; b < n; ++b)
    for (Vertex c = b + 1; c < n; ++c)
      for (Vertex d = c + 1; d < n; ++d)
        if (auto p = induced_p4(rows, {a, b, c, d})) return p;
  return std::nullopt;
}

P4Check finish(const std::vector<VertexSet>& rows, std::size_t n, std::int64_t first) {
  P4Check out;
  if (first < static_cast<std::int64_t>(n)) {
    out.cograph = false;
    out.p4 = scan_from(rows, static_cast<Vertex>(first), n);
  }
  return out;
}

}  // namespace

P4Check is_cograph_p4(const Graph& g) {
  const std::size_t n = g.order();
  const auto rows = adjacency_sets(g);
  const auto count = static_cast<std::int64_t>(n);
  std::atomic<std::int64_t> first{count};
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t a = 0; a < count; ++a) {
    if (a > first.load(std::memory_order_relaxed)) continue;
    if (scan_from(rows, static_cast<Vertex>(a), n)) {
      auto cur = first.load();
      while (a < cur && !first.compare_exchange_weak(cur, a)) {
      }
    }
  }
  return finish(rows, n, first.load());
}

namespace serial {
P4Check is_cograph_p4(const Graph& g) {
  const std::size_t n = g.order();
  const auto rows = adjacency_sets(g);
  const auto count = static_cast<std::int64_t>(n);
  std::int64_t first = count;
  for (std::int64_t a = 0; a < count && first == count; ++a)
    if (scan_from(rows, static_cast<Vertex>(a), n)) first = a;
  return finish(rows, n, first);
}
}  // namespace serial

Cotree::Cotree(std::vector<Node> nodes, std::size_t root, std::size_t vertex_count)
    : nodes_(std::move(nodes)), root_(root), vertex_count_(vertex_count) {}

namespace {

std::vector<Vertex> collect_leaves(const Cotree& t, std::size_t node) {
  std::vector<Vertex> out;
  std::vector<std::size_t> stack{node};
  while (!stack.empty()) {
    const auto& nd = t.node(stack.back());
    stack.pop_back();
    if (nd.kind == Cotree::Kind::leaf)
      out.push_back(nd.vertex);
    else
      stack.insert(stack.end(), nd.children.begin(), nd.children.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Graph Cotree::evaluate() const {
  std::vector<Edge> edges;
  for (const auto& nd : nodes_) {
    if (nd.kind != Kind::join) continue;
    std::vector<std::vector<Vertex>> parts;
    for (auto c : nd.children)
      parts.push_back(collect_leaves(*this, c));
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t j = i + 1; j < parts.size(); ++j)
        for (Vertex u : parts[i])
          for (Vertex v : parts[j]) edges.emplace_back(u, v);
  }
  return Graph(vertex_count_, edges);
}

std::vector<ConstructionStep> Cotree::trace() const {
  std::vector<ConstructionStep> steps;
  if (nodes_.empty()) return steps;
  using Op = ConstructionStep::Op;
  auto emit = [&](ConstructionStep s) {
    steps.push_back(std::move(s));
    return steps.size() - 1;
  };
  auto fold_union = [&](const std::vector<std::size_t>& parts) {
    std::size_t acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = emit({Op::disjoint_union, 0, {acc, parts[i]}});
    return acc;
  };
  // Post-order walk; depth is bounded by the vertex count.
  auto walk = [&](auto&& self, std::size_t node) -> std::size_t {
    const auto& nd = nodes_[node];
    if (nd.kind == Kind::leaf) return emit({Op::single_vertex, nd.vertex, {}});
    std::vector<std::size_t> parts;
    for (auto c : nd.children) {
      const std::size_t s = self(self, c);
      parts.push_back(nd.kind == Kind::join ? emit({Op::complement, 0, {s}}) : s);
    }
    const std::size_t u = fold_union(parts);
    return nd.kind == Kind::join ? emit({Op::complement, 0, {u}}) : u;
  };
  walk(walk, root_);
  return steps;
}

Graph replay_trace(const std::vector<ConstructionStep>& trace, std::size_t vertex_count) {
  using Op = ConstructionStep::Op;
  struct Built {
    Graph graph;
    std::vector<Vertex> ids;
  };
  std::vector<Built> built;
  built.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& s = trace[i];
    for (auto o : s.operands)
      if (o >= i) throw DomainError("trace step refers to a later step");
    switch (s.op) {
      case Op::single_vertex:
        built.push_back({empty_graph(1), {s.vertex}});
        break;
      case Op::complement:
        if (s.operands.size() != 1) throw DomainError("complement takes one operand");
        built.push_back({complement(built[s.operands[0]].graph), built[s.operands[0]].ids});
        break;
      case Op::disjoint_union: {
        if (s.operands.size() != 2) throw DomainError("union takes two operands");
        const auto& a = built[s.operands[0]];
        const auto& b = built[s.operands[1]];
        auto ids = a.ids;
        ids.insert(ids.end(), b.ids.begin(), b.ids.end());
        built.push_back({disjoint_union(a.graph, b.graph), std::move(ids)});
        break;
      }
    }
  }
  if (built.empty()) return empty_graph(vertex_count);
  const auto& last = built.back();
  std::vector<char> seen(vertex_count, 0);
  for (Vertex v : last.ids) {
    if (v >= vertex_count || seen[v]) throw DomainError("trace leaves are not a vertex bijection");
    seen[v] = 1;
  }
  if (last.ids.size() != vertex_count) throw DomainError("trace does not cover every vertex");
  std::vector<Edge> edges;
  for (auto [u, v] : last.graph.edges()) edges.emplace_back(last.ids[u], last.ids[v]);
  return Graph(vertex_count, edges);
}

namespace {

// Decomposes g[subset]; `subset` is sorted.
std::size_t decompose(const Graph& g, const std::vector<Vertex>& subset,
                      std::vector<Cotree::Node>& nodes) {
  if (subset.size() == 1) {
    nodes.push_back({Cotree::Kind::leaf, subset[0], {}});
    return nodes.size() - 1;
  }
  const auto sub = induced_subgraph(g, subset);
  auto parts = connected_components(sub.graph);
  Cotree::Kind kind = Cotree::Kind::disjoint_union;
  if (parts.count() == 1) {
    parts = connected_components(complement(sub.graph));
    kind = Cotree::Kind::join;
    if (parts.count() == 1)
      throw NotACograph("the subgraph on {" + std::to_string(subset.front()) +
                        ", ...} (" + std::to_string(subset.size()) +
                        " vertices) and its complement are both connected");
  }
  // Blocks come out ordered by minimum local id, hence by minimum source id.
  std::vector<std::size_t> children;
  for (const auto& block : parts.blocks) {
    std::vector<Vertex> original;
    for (Vertex v : block) original.push_back(sub.original[v]);
    children.push_back(decompose(g, original, nodes));
  }
  nodes.push_back({kind, 0, std::move(children)});
  return nodes.size() - 1;
}

const char* kind_name(Cotree::Kind k) {
  switch (k) {
    case Cotree::Kind::leaf: return "leaf";
    case Cotree::Kind::disjoint_union: return "union";
    case Cotree::Kind::join: return "join";
  }
  return "leaf";
}

nlohmann::json node_json(const Cotree& t, std::size_t i) {
  const auto& nd = t.node(i);
  if (nd.kind == Cotree::Kind::leaf) return {{"op", "leaf"}, {"vertex", nd.vertex}};
  auto children = nlohmann::json::array();
  for (auto c : nd.children) children.push_back(node_json(t, c));
  return {{"op", kind_name(nd.kind)}, {"children", std::move(children)}};
}

std::size_t parse_node(const nlohmann::json& j, std::vector<Cotree::Node>& nodes,
                       Vertex& max_vertex) {
  const auto op = j.at("op").get<std::string>();
  if (op == "leaf") {
    const auto v = j.at("vertex").get<Vertex>();
    max_vertex = std::max(max_vertex, v);
    nodes.push_back({Cotree::Kind::leaf, v, {}});
    return nodes.size() - 1;
  }
  Cotree::Kind kind;
  if (op == "union")
    kind = Cotree::Kind::disjoint_union;
  else if (op == "join")
    kind = Cotree::Kind::join;
  else
    throw ParseError("cotree JSON: unknown op \"" + op + "\"");
  std::vector<std::size_t> children;
  for (const auto& c : j.at("children")) children.push_back(parse_node(c, nodes, max_vertex));
  if (children.size() < 2) throw ParseError("cotree JSON: internal node needs two children");
  nodes.push_back({kind, 0, std::move(children)});
  return nodes.size() - 1;
}

}  // namespace

Cotree build_cotree(const Graph& g) {
  if (g.empty()) throw DomainError("the empty graph has no cotree");
  std::vector<Cotree::Node> nodes;
  std::vector<Vertex> all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  const std::size_t root = decompose(g, all, nodes);
  return Cotree(std::move(nodes), root, g.order());
}

nlohmann::json to_json(const Cotree& t) {
  if (t.nodes().empty()) return nullptr;
  return node_json(t, t.root());
}

Cotree cotree_from_json(const nlohmann::json& j) {
  try {
    std::vector<Cotree::Node> nodes;
    Vertex max_vertex = 0;
    const std::size_t root = parse_node(j, nodes, max_vertex);
    return Cotree(std::move(nodes), root, static_cast<std::size_t>(max_vertex) + 1);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("cotree JSON: ") + e.what());
  }
}

TightColoringSearch exists_tight_coloring(const Graph& g, WorkBudget* budget) {
  if (g.empty()) throw DomainError("tightness is undefined on the empty graph");
  TightColoringSearch out;
  const std::size_t k = chromatic_number(g, budget);
  enumerate_colorings_unordered(
      g, k,
      [&](const Coloring& c) {
        if (!is_tight_coloring(g, c).tight) return true;
        out.exists = true;
        out.coloring = c;
        return false;
      },
      budget);
  return out;
}

bool EquivalenceReport::consistent() const {
  return tight == exists_tight_coloring && tight == all_maximal_cliques_size_k &&
         (k == 1 || tight == strongly_cliqued) && tight == weakly_cliqued;
}

EquivalenceReport equivalence_report(const Graph& g, WorkBudget* budget) {
  if (g.empty()) throw DomainError("the empty graph has no equivalence report");
  const auto p4 = is_cograph_p4(g);
  if (!p4.cograph) {
    const auto& q = *p4.p4;
    throw NotACograph("induced P4 " + std::to_string(q[0]) + "-" + std::to_string(q[1]) +
                      "-" + std::to_string(q[2]) + "-" + std::to_string(q[3]));
  }
  EquivalenceReport r;
  r.k = chromatic_number(g, budget);

  const auto tight = is_tight_graph(g, budget);
  r.tight = tight.tight;
  r.non_tight_coloring = tight.coloring;
  r.non_tight_recoloring = tight.witness;

  const auto exists = exists_tight_coloring(g, budget);
  r.exists_tight_coloring = exists.exists;
  r.tight_coloring = exists.coloring;

  r.all_maximal_cliques_size_k = true;
  for (const auto& c : maximal_cliques(g, budget))
    if (c.size() != r.k) {
      r.all_maximal_cliques_size_k = false;
      r.small_maximal_clique = c;
      break;
    }

  const auto strong = is_strongly_cliqued(g, budget);
  r.strongly_cliqued = strong.cliqued;
  r.isolated_vertex = strong.isolated;
  r.uncovered_edge = strong.uncovered_edge;

  const auto weak = is_weakly_cliqued(g, budget);
  r.weakly_cliqued = weak.cliqued;
  r.uncovered_vertex = weak.uncovered;
  return r;
}

nlohmann::json to_json(const EquivalenceReport& r) {
  nlohmann::json j = {{"k", r.k},
                      {"tight", r.tight},
                      {"exists_tight_coloring", r.exists_tight_coloring},
                      {"all_maximal_cliques_size_k", r.all_maximal_cliques_size_k},
                      {"strongly_cliqued", r.strongly_cliqued},
                      {"weakly_cliqued", r.weakly_cliqued},
                      {"consistent", r.consistent()}};
  auto witnesses = nlohmann::json::object();
  if (r.non_tight_coloring)
    witnesses["non_tight"] = {{"coloring", r.non_tight_coloring->colors},
                              {"vertex", r.non_tight_recoloring->vertex},
                              {"color", r.non_tight_recoloring->color}};
  if (r.tight_coloring) witnesses["tight_coloring"] = r.tight_coloring->colors;
  if (r.small_maximal_clique) witnesses["small_maximal_clique"] = *r.small_maximal_clique;
  if (r.isolated_vertex) witnesses["isolated_vertex"] = *r.isolated_vertex;
  if (r.uncovered_edge)
    witnesses["uncovered_edge"] = {r.uncovered_edge->first, r.uncovered_edge->second};
  if (r.uncovered_vertex) witnesses["uncovered_vertex"] = *r.uncovered_vertex;
  j["witnesses"] = std::move(witnesses);
  return j;
}

}  // namespace powercolor
