#include "powercolor/coloring.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <queue>

#include <omp.h>

#include "coloring_search.hpp"
#include "powercolor/errors.hpp"

namespace powercolor {

namespace detail {
std::vector<Vertex> search_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> weight(n, 0);
  std::vector<char> done(n, 0);
  // Max-heap on (weight, -id); stale entries are skipped.
  std::priority_queue<std::pair<std::size_t, std::int64_t>> heap;
  for (Vertex v = 0; v < n; ++v) heap.push({0, -static_cast<std::int64_t>(v)});
  std::vector<Vertex> order;
  order.reserve(n);
  while (!heap.empty()) {
    const auto [w, key] = heap.top();
    heap.pop();
    const auto v = static_cast<Vertex>(-key);
    if (done[v] || w != weight[v]) continue;
    done[v] = 1;
    order.push_back(v);
    for (Vertex u : g.neighbors(v))
      if (!done[u]) heap.push({++weight[u], -static_cast<std::int64_t>(u)});
  }
  return order;
}
}  // namespace detail

using detail::ColoringSearch;
using detail::ColorMask;

void WorkBudget::charge(std::uint64_t nodes) {
  const auto total = used_.fetch_add(nodes, std::memory_order_relaxed) + nodes;
  if (total > limit_)
    throw BudgetExceeded("work budget of " + std::to_string(limit_) +
                         " node expansions exhausted");
}

namespace {

// Supplies a default budget when the caller passed none.
class BudgetRef {
 public:
  explicit BudgetRef(WorkBudget* b) {
    if (b == nullptr) {
      owned_ = std::make_unique<WorkBudget>();
      b = owned_.get();
    }
    ref_ = b;
  }
  WorkBudget& operator*() const { return *ref_; }

 private:
  std::unique_ptr<WorkBudget> owned_;
  WorkBudget* ref_;
};

bool two_colorable(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex w : g.neighbors(queue[h])) {
        if (side[w] < 0) {
          side[w] = 1 - side[queue[h]];
          queue.push_back(w);
        } else if (side[w] == side[queue[h]]) {
          return false;
        }
      }
  }
  return true;
}

bool colorable(const Graph& g, std::size_t k, WorkBudget& budget) {
  const auto order = detail::search_order(g);
  ColoringSearch search(g, k, order, budget);
  bool found = false;
  search.run(g.order(), {}, [&](const std::vector<Color>&) {
    found = true;
    return false;
  });
  return found;
}

std::uint64_t count_subtree(const Graph& g, std::size_t k,
                            std::span<const Vertex> order,
                            std::span<const Color> prefix, WorkBudget& budget) {
  ColoringSearch search(g, k, order, budget);
  std::uint64_t count = 0;
  search.run(g.order(), prefix, [&](const std::vector<Color>&) {
    ++count;
    return true;
  });
  return count;
}

// Counts proper k-colorings of a connected graph.
template <bool Parallel>
BigCount count_connected(const Graph& g, std::size_t k, WorkBudget& budget,
                         bool canonical) {
  const std::size_t n = g.order();
  if (n == 1) return k;
  if (k == 0) return 0;
  const auto order = detail::search_order(g);
  std::vector<Color> pin;
  if (canonical) pin.push_back(0);

  if constexpr (!Parallel) {
    BigCount c = count_subtree(g, k, order, pin, budget);
    return canonical ? BigCount(c * k) : c;
  } else {
    const std::size_t target = 32 * static_cast<std::size_t>(omp_get_max_threads());
    std::size_t depth = std::max<std::size_t>(pin.size(), 1);
    std::vector<std::vector<Color>> prefixes;
    while (true) {
      prefixes.clear();
      ColoringSearch search(g, k, order, budget);
      search.run(depth, pin, [&](const std::vector<Color>& colors) {
        std::vector<Color> p(depth);
        for (std::size_t d = 0; d < depth; ++d) p[d] = colors[search.vertex_at(d)];
        prefixes.push_back(std::move(p));
        return true;
      });
      if (prefixes.size() >= target || depth >= n) break;
      ++depth;
    }
    if (depth >= n) {
      BigCount c = prefixes.size();
      return canonical ? BigCount(c * k) : c;
    }

    std::vector<std::uint64_t> counts(prefixes.size(), 0);
    std::exception_ptr failure;
    const auto jobs = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < jobs; ++i) {
      try {
        counts[i] = count_subtree(g, k, order, prefixes[i], budget);
      } catch (...) {
#pragma omp critical(powercolor_count_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
    BigCount total = 0;
    for (auto c : counts) total += c;
    return canonical ? BigCount(total * k) : total;
  }
}

template <bool Parallel>
ColoringCount count_impl(const Graph& g, std::size_t k, WorkBudget* budget_ptr,
                         const CountOptions& options) {
  BudgetRef budget(budget_ptr);
  ColoringCount out{k, 1};
  if (g.empty()) return out;
  if (k == 0) {
    out.count = 0;
    return out;
  }
  const auto comps = connected_components(g);
  for (const auto& block : comps.blocks) {
    if (block.size() == 1) {
      out.count *= k;
      continue;
    }
    const auto sub = induced_subgraph(g, block);
    out.count *= count_connected<Parallel>(sub.graph, k, *budget,
                                           options.canonicalize_first_vertex);
    if (out.count == 0) break;
  }
  return out;
}

void check_domain(const Graph& g, const Coloring& c) {
  if (c.size() != g.order())
    throw DomainError("coloring covers " + std::to_string(c.size()) +
                      " vertices, graph has " + std::to_string(g.order()));
  for (Color col : c.colors)
    if (col >= c.palette)
      throw DomainError("color " + std::to_string(col) + " outside palette of size " +
                        std::to_string(c.palette));
}

}  // namespace

std::size_t chromatic_number(const Graph& g, WorkBudget* budget_ptr) {
  if (g.empty()) return 0;
  if (g.size() == 0) return 1;
  if (two_colorable(g)) return 2;
  BudgetRef budget(budget_ptr);
  std::size_t chi = 3;
  for (const auto& block : connected_components(g).blocks) {
    if (block.size() < chi) continue;
    const auto sub = induced_subgraph(g, block);
    while (!colorable(sub.graph, chi, *budget)) ++chi;
  }
  return chi;
}

bool enumerate_colorings(const Graph& g, std::size_t k, const ColoringVisitor& visit,
                         WorkBudget* budget_ptr) {
  BudgetRef budget(budget_ptr);
  const auto order = detail::identity_order(g.order());
  ColoringSearch search(g, k, order, *budget);
  Coloring current{{}, k};
  return search.run(order.size(), {}, [&](const std::vector<Color>& colors) {
    current.colors = colors;
    return visit(current);
  });
}

bool enumerate_colorings_unordered(const Graph& g, std::size_t k,
                                   const ColoringVisitor& visit,
                                   WorkBudget* budget_ptr) {
  BudgetRef budget(budget_ptr);
  const auto order = detail::search_order(g);
  ColoringSearch search(g, k, order, *budget);
  Coloring current{{}, k};
  return search.run(g.order(), {}, [&](const std::vector<Color>& colors) {
    current.colors = colors;
    return visit(current);
  });
}

std::vector<Coloring> all_colorings(const Graph& g, std::size_t k,
                                    WorkBudget* budget) {
  std::vector<Coloring> out;
  enumerate_colorings(
      g, k,
      [&](const Coloring& c) {
        out.push_back(c);
        return true;
      },
      budget);
  return out;
}

ColoringCount count_colorings(const Graph& g, std::size_t k, WorkBudget* budget,
                              const CountOptions& options) {
  return count_impl<true>(g, k, budget, options);
}

namespace serial {
ColoringCount count_colorings(const Graph& g, std::size_t k, WorkBudget* budget,
                              const CountOptions& options) {
  return count_impl<false>(g, k, budget, options);
}
}  // namespace serial

bool is_proper(const Graph& g, const Coloring& c) {
  check_domain(g, c);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v && c[u] == c[v]) return false;
  return true;
}

TightColoringResult is_tight_coloring(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw ImproperColoring("tightness needs a proper coloring");
  if (c.palette > detail::kMaxSearchPalette)
    throw DomainError("tightness check supports palettes up to 64 colors");
  const ColorMask full = detail::full_mask(c.palette);
  for (Vertex v = 0; v < g.order(); ++v) {
    ColorMask seen = ColorMask{1} << c[v];
    for (Vertex u : g.neighbors(v)) seen |= ColorMask{1} << c[u];
    const ColorMask missing = full & ~seen;
    if (missing != 0)
      return {false, Recoloring{v, static_cast<Color>(std::countr_zero(missing))}};
  }
  return {true, std::nullopt};
}

TightGraphResult is_tight_graph(const Graph& g, WorkBudget* budget_ptr) {
  if (g.empty()) throw DomainError("tightness is undefined on the empty graph");
  BudgetRef budget(budget_ptr);
  TightGraphResult out;
  out.chi = chromatic_number(g, &*budget);
  enumerate_colorings_unordered(
      g, out.chi,
      [&](const Coloring& c) {
        auto r = is_tight_coloring(g, c);
        if (r.tight) return true;
        out.tight = false;
        out.coloring = c;
        out.witness = r.witness;
        return false;
      },
      &*budget);
  return out;
}

Coloring recolor(const Coloring& c, const Recoloring& change) {
  if (change.vertex >= c.size()) throw DomainError("recolored vertex out of range");
  if (change.color >= c.palette) throw DomainError("recolor target outside palette");
  Coloring out = c;
  out.colors[change.vertex] = change.color;
  return out;
}

}  // namespace powercolor
