#pragma once

// Backtracking search over proper colorings with forward checking and
// singleton propagation. Colors are tried in ascending order at every level,
// so with the identity vertex order solutions come out in lexicographic
// order of the color vector. Propagation only removes values that cannot
// extend the current partial assignment; the solution set is unchanged.

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "powercolor/coloring.hpp"
#include "powercolor/errors.hpp"

namespace powercolor::detail {

using ColorMask = std::uint64_t;

inline constexpr std::size_t kMaxSearchPalette = 64;

inline ColorMask full_mask(std::size_t k) {
  return k >= 64 ? ~ColorMask{0} : ((ColorMask{1} << k) - 1);
}

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, std::size_t k, std::span<const Vertex> order,
                 WorkBudget& budget)
      : g_(g), k_(k), order_(order.begin(), order.end()), budget_(budget) {
    if (k > kMaxSearchPalette)
      throw DomainError("palette sizes above 64 are not supported by the search");
    const std::size_t n = g.order();
    if (order_.size() != n) throw DomainError("search order must cover every vertex");
    domain_.assign(n, full_mask(k));
    color_.assign(n, 0);
    assigned_.assign(n, 0);
    mark_.resize(n + 1);
    cand_.resize(n + 1);
  }

  /// Vertex assigned at level `d`.
  Vertex vertex_at(std::size_t d) const { return order_[d]; }

  /// Depth-first search over the first `limit` vertices of the order. The
  /// first `prefix.size()` levels are pinned to the given colors. `visit`
  /// receives the color array (indexed by vertex id, only the first `limit`
  /// vertices of the order are meaningful) and returns false to stop.
  /// Returns false if stopped by the visitor.
  template <class Visit>
  bool run(std::size_t limit, std::span<const Color> prefix, Visit&& visit) {
    const std::size_t n = g_.order();
    if (k_ == 0) return n == 0 ? visit(color_) : true;
    if (limit == 0) return visit(color_);

    std::size_t d = 0;
    enter(d, prefix);
    while (true) {
      if (cand_[d] == 0) {
        if (d == 0) return true;
        --d;
        undo(d);
        continue;
      }
      const ColorMask bit = cand_[d] & (~cand_[d] + 1);
      cand_[d] &= cand_[d] - 1;
      const Vertex v = order_[d];
      mark_[d] = trail_.size();
      budget_.charge();
      if (!assign(v, static_cast<Color>(std::countr_zero(bit)))) {
        undo(d);
        continue;
      }
      if (d + 1 == limit) {
        if (!visit(color_)) return false;
        undo(d);
        continue;
      }
      ++d;
      enter(d, prefix);
    }
  }

 private:
  struct TrailEntry {
    Vertex vertex;
    ColorMask removed;
  };

  void enter(std::size_t d, std::span<const Color> prefix) {
    const Vertex v = order_[d];
    cand_[d] = domain_[v];
    if (d < prefix.size()) cand_[d] &= ColorMask{1} << prefix[d];
  }

  void undo(std::size_t d) {
    const Vertex v = order_[d];
    assigned_[v] = 0;
    const std::size_t mark = mark_[d];
    while (trail_.size() > mark) {
      const auto& e = trail_.back();
      domain_[e.vertex] |= e.removed;
      trail_.pop_back();
    }
  }

  bool remove(Vertex u, ColorMask bit) {
    trail_.push_back({u, bit});
    domain_[u] &= ~bit;
    return domain_[u] != 0;
  }

  bool assign(Vertex v, Color c) {
    assigned_[v] = 1;
    color_[v] = c;
    queue_.clear();
    queue_.push_back({v, ColorMask{1} << c});
    for (std::size_t head = 0; head < queue_.size(); ++head) {
      const auto [x, bit] = queue_[head];
      for (Vertex u : g_.neighbors(x)) {
        if (assigned_[u] || (domain_[u] & bit) == 0) continue;
        if (!remove(u, bit)) return false;
        if (std::has_single_bit(domain_[u])) queue_.push_back({u, domain_[u]});
      }
    }
    return true;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<Vertex> order_;
  WorkBudget& budget_;
  std::vector<ColorMask> domain_;
  std::vector<Color> color_;
  std::vector<char> assigned_;
  std::vector<std::size_t> mark_;
  std::vector<ColorMask> cand_;
  std::vector<TrailEntry> trail_;
  std::vector<TrailEntry> queue_;
};

inline std::vector<Vertex> identity_order(std::size_t n) {
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  return order;
}

/// Maximum cardinality search: repeatedly take the vertex with the most
/// already-ordered neighbors, lowest id on ties. Keeps each new vertex
/// constrained by its predecessors, which is what the propagation needs.
std::vector<Vertex> search_order(const Graph& g);

}  // namespace powercolor::detail
