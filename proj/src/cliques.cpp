#include "powercolor/cliques.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "powercolor/errors.hpp"
#include "powercolor/vertex_set.hpp"

namespace powercolor {

namespace {

class BronKerbosch {
 public:
  BronKerbosch(const Graph& g, WorkBudget* budget)
      : rows_(adjacency_sets(g)), budget_(budget) {}

  std::vector<Clique> run(std::size_t n) {
    if (n > 0) expand(VertexSet::full(n), VertexSet(n));
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  void expand(VertexSet candidates, VertexSet excluded) {
    if (budget_) budget_->charge();
    if (candidates.empty()) {
      if (excluded.empty()) found_.push_back(current_);
      return;
    }
    // Pivot maximizing |candidates ∩ N(pivot)|.
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have = false;
    (candidates | excluded).for_each([&](Vertex u) {
      const std::size_t c = candidates.intersection_count(rows_[u]);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    });
    const VertexSet branch = candidates - rows_[pivot];
    branch.for_each([&](Vertex v) {
      current_.push_back(v);
      expand(candidates & rows_[v], excluded & rows_[v]);
      current_.pop_back();
      candidates.erase(v);
      excluded.insert(v);
    });
  }

  std::vector<VertexSet> rows_;
  WorkBudget* budget_;
  Clique current_;
  std::vector<Clique> found_;
};

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

void require_nonempty(const Graph& g, const char* what) {
  if (g.empty()) throw DomainError(std::string(what) + " is undefined on the empty graph");
}

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g, WorkBudget* budget) {
  auto out = BronKerbosch(g, budget).run(g.order());
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Clique> cliques_of_size(const Graph& g, std::size_t k, WorkBudget* budget) {
  std::set<Clique> unique;
  if (k == 0) return {Clique{}};
  for (const auto& big : maximal_cliques(g, budget)) {
    if (big.size() < k) continue;
    if (big.size() == k) {
      unique.insert(big);
      continue;
    }
    // Size-k subsets via a selection mask, in lexicographic order.
    std::vector<char> pick(big.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), 1);
    do {
      Clique sub;
      for (std::size_t i = 0; i < big.size(); ++i)
        if (pick[i]) sub.push_back(big[i]);
      unique.insert(std::move(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {unique.begin(), unique.end()};
}

WeaklyCliquedResult is_weakly_cliqued(const Graph& g, WorkBudget* budget) {
  require_nonempty(g, "weak cliquedness");
  WeaklyCliquedResult out;
  out.chi = chromatic_number(g, budget);
  std::vector<char> covered(g.order(), 0);
  for (const auto& c : maximal_cliques(g, budget))
    if (c.size() >= out.chi)
      for (Vertex v : c) covered[v] = 1;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!covered[v]) {
      out.cliqued = false;
      out.uncovered = v;
      break;
    }
  return out;
}

StronglyCliquedResult is_strongly_cliqued(const Graph& g, WorkBudget* budget) {
  require_nonempty(g, "strong cliquedness");
  StronglyCliquedResult out;
  out.chi = chromatic_number(g, budget);
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) {
      out.cliqued = false;
      out.isolated = v;
      return out;
    }
  std::set<Edge> covered;
  for (const auto& c : maximal_cliques(g, budget)) {
    if (c.size() < out.chi) continue;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) covered.emplace(c[i], c[j]);
  }
  for (const auto& e : g.edges())
    if (!covered.contains(e)) {
      out.cliqued = false;
      out.uncovered_edge = e;
      break;
    }
  return out;
}

CliqueStructure clique_connected_components(const Graph& g, WorkBudget* budget) {
  const auto weak = is_weakly_cliqued(g, budget);
  if (!weak.cliqued)
    throw NotWeaklyCliqued("vertex " + std::to_string(*weak.uncovered) +
                           " lies in no clique of size " + std::to_string(weak.chi));
  CliqueStructure out;
  out.k = weak.chi;
  out.cliques = cliques_of_size(g, out.k, budget);

  // Cliques sharing a vertex are adjacent in the intersection graph.
  UnionFind uf(out.cliques.size());
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> first_clique(g.order(), none);
  for (std::size_t i = 0; i < out.cliques.size(); ++i)
    for (Vertex v : out.cliques[i]) {
      if (first_clique[v] == none)
        first_clique[v] = i;
      else
        uf.unite(first_clique[v], i);
    }

  std::vector<std::size_t> label(out.cliques.size(), none);
  out.clique_component.resize(out.cliques.size());
  for (std::size_t i = 0; i < out.cliques.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (label[root] == none) label[root] = out.component_count++;
    out.clique_component[i] = label[root];
  }
  out.vertex_component.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    out.vertex_component[v] = out.clique_component[first_clique[v]];
  return out;
}

nlohmann::json to_json(const CliqueStructure& s) {
  return {{"k", s.k}, {"cliques", s.cliques}, {"component", s.clique_component}};
}

CliqueStructure clique_structure_from_json(const nlohmann::json& j) {
  try {
    CliqueStructure s;
    s.k = j.at("k").get<std::size_t>();
    s.cliques = j.at("cliques").get<std::vector<Clique>>();
    s.clique_component = j.at("component").get<std::vector<std::size_t>>();
    if (s.clique_component.size() != s.cliques.size())
      throw ParseError("clique structure: one component index per clique expected");
    Vertex max_vertex = 0;
    for (const auto& c : s.cliques)
      for (Vertex v : c) max_vertex = std::max(max_vertex, v);
    s.vertex_component.assign(s.cliques.empty() ? 0 : max_vertex + 1, 0);
    for (std::size_t i = 0; i < s.cliques.size(); ++i) {
      for (Vertex v : s.cliques[i]) s.vertex_component[v] = s.clique_component[i];
      s.component_count = std::max(s.component_count, s.clique_component[i] + 1);
    }
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("clique structure JSON: ") + e.what());
  }
}

}  // namespace powercolor
