#include "powercolor/generate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "powercolor/errors.hpp"
#include "powercolor/graph_io.hpp"

namespace powercolor {

namespace {

using Row = std::uint32_t;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()) {
    if (n_ > 32) throw DomainError("canonical form supports at most 32 vertices");
    rows_.assign(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v)) rows_[v] |= Row{1} << u;
    degree_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) degree_[v] = std::popcount(rows_[v]);
    slot_degree_ = degree_;
    std::sort(slot_degree_.begin(), slot_degree_.end());
    best_col_.assign(n_, kInf);
    perm_.assign(n_, 0);
    best_perm_.assign(n_, 0);
  }

  std::vector<Vertex> run() {
    if (n_ > 0) search(0, 0);
    return best_perm_;
  }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();

  bool twins(Vertex a, Vertex b) const {
    const Row mask = ~((Row{1} << a) | (Row{1} << b));
    return (rows_[a] & mask) == (rows_[b] & mask);
  }

  void search(std::size_t j, Row used) {
    if (j == n_) {
      best_perm_ = perm_;
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if ((used >> v) & 1 || degree_[v] != slot_degree_[j]) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, v); }))
        continue;
      tried.push_back(v);
      // Column j of the upper triangle, row 0 most significant.
      std::uint64_t key = 0;
      for (std::size_t i = 0; i < j; ++i) key = (key << 1) | ((rows_[perm_[i]] >> v) & 1);
      if (key > best_col_[j]) continue;
      if (key < best_col_[j]) {
        best_col_[j] = key;
        std::fill(best_col_.begin() + j + 1, best_col_.end(), kInf);
      }
      perm_[j] = v;
      search(j + 1, used | (Row{1} << v));
    }
  }

  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<int> degree_;
  std::vector<int> slot_degree_;
  std::vector<std::uint64_t> best_col_;
  std::vector<Vertex> perm_;
  std::vector<Vertex> best_perm_;
};

Graph relabel(const Graph& g, const std::vector<Vertex>& position_to_vertex) {
  std::vector<Vertex> pos(g.order());
  for (Vertex p = 0; p < g.order(); ++p) pos[position_to_vertex[p]] = p;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(pos[u], pos[v]);
  return Graph(g.order(), edges);
}

// Children of one parent: one new vertex joined to every neighbor subset.
void augment(const Graph& parent, std::set<std::string>& out) {
  const std::size_t m = parent.order();
  const auto base = parent.edges();
  std::vector<Edge> edges;
  for (Row mask = 0; mask < (Row{1} << m); ++mask) {
    edges = base;
    for (Vertex u = 0; u < m; ++u)
      if ((mask >> u) & 1) edges.emplace_back(u, static_cast<Vertex>(m));
    out.insert(canonical_graph6(Graph(m + 1, edges)));
  }
}

std::vector<Graph> decode_all(const std::set<std::string>& codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(parse_graph6(c));
  return out;
}

void check_order(std::size_t n) {
  if (n > kMaxExhaustiveOrder)
    throw DomainError("exhaustive generation is limited to " +
                      std::to_string(kMaxExhaustiveOrder) + " vertices");
}

}  // namespace

Graph canonical_form(const Graph& g) { return relabel(g, Canonizer(g).run()); }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  check_order(n);
  std::vector<Graph> level{empty_graph(0)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::set<std::string> next;
    const auto parents = static_cast<std::int64_t>(level.size());
#pragma omp parallel
    {
      std::set<std::string> local;
#pragma omp for schedule(dynamic) nowait
      for (std::int64_t i = 0; i < parents; ++i) augment(level[i], local);
#pragma omp critical(powercolor_generate_merge)
      next.merge(local);
    }
    level = decode_all(next);
  }
  return level;
}

namespace serial {
std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  check_order(n);
  std::vector<Graph> level{empty_graph(0)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::set<std::string> next;
    for (const auto& parent : level) augment(parent, next);
    level = decode_all(next);
  }
  return level;
}
}  // namespace serial

std::vector<Graph> nonisomorphic_graphs_up_to(std::size_t max_n, bool connected_only) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : nonisomorphic_graphs(n))
      if (!connected_only || is_connected(g)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> random_graphs(std::size_t n, std::size_t count, std::uint64_t seed,
                                 double p) {
  if (p < 0 || p > 1) throw DomainError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Graph> out;
  out.reserve(count);
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < count; ++s) {
    edges.clear();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace powercolor
