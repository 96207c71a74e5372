#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "powercolor/graph.hpp"

namespace powercolor {

using Color = std::uint32_t;
using BigCount = boost::multiprecision::cpp_int;

/// Total map vertex -> color in {0, ..., palette-1}. Properness is checked
/// separately so improper assignments can still be represented.
struct Coloring {
  std::vector<Color> colors;
  std::size_t palette = 0;

  std::size_t size() const { return colors.size(); }
  Color operator[](Vertex v) const { return colors[v]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Shared counter of backtracking node expansions. Thread-safe.
class WorkBudget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 1'000'000'000;

  explicit WorkBudget(std::uint64_t limit = kDefaultLimit) : limit_(limit) {}
  WorkBudget(const WorkBudget&) = delete;
  WorkBudget& operator=(const WorkBudget&) = delete;

  /// Records `nodes` expansions; throws BudgetExceeded past the limit.
  void charge(std::uint64_t nodes = 1);

  std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }
  std::uint64_t limit() const { return limit_; }
  bool exhausted() const { return used() > limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

/// Number of proper colorings from the palette {0, ..., k-1}. Colorings need
/// not use every color.
struct ColoringCount {
  std::size_t k = 0;
  BigCount count = 0;
};

struct CountOptions {
  /// Fix the first vertex of each component to color 0 and multiply the
  /// count back by k. Valid because color permutations act freely.
  bool canonicalize_first_vertex = false;
};

/// Receives each coloring; return false to stop the enumeration.
using ColoringVisitor = std::function<bool(const Coloring&)>;

/// Smallest k admitting a proper k-coloring; 0 for the empty graph.
/// Passing no budget uses a private budget with the default limit.
std::size_t chromatic_number(const Graph& g, WorkBudget* budget = nullptr);

/// Visits every proper coloring with palette {0..k-1} exactly once, in
/// lexicographic order of the color vector (vertex 0 most significant).
/// Returns false if the visitor stopped the enumeration early.
bool enumerate_colorings(const Graph& g, std::size_t k, const ColoringVisitor& visit,
                         WorkBudget* budget = nullptr);

/// The same set of colorings, searched along a maximum-cardinality vertex
/// order. Deterministic but not lexicographic; far faster on products,
/// whose id order starts with long runs of pairwise non-adjacent vertices.
bool enumerate_colorings_unordered(const Graph& g, std::size_t k,
                                   const ColoringVisitor& visit,
                                   WorkBudget* budget = nullptr);

std::vector<Coloring> all_colorings(const Graph& g, std::size_t k,
                                    WorkBudget* budget = nullptr);

/// P(G, k), factorized over connected components. Subtrees of each
/// component's search are counted on an OpenMP worker pool.
ColoringCount count_colorings(const Graph& g, std::size_t k,
                              WorkBudget* budget = nullptr,
                              const CountOptions& options = {});

namespace serial {
/// Single-threaded reference for count_colorings.
ColoringCount count_colorings(const Graph& g, std::size_t k,
                              WorkBudget* budget = nullptr,
                              const CountOptions& options = {});
}  // namespace serial

/// True iff no edge is monochromatic. DomainError if `c` does not cover
/// exactly the vertices of `g` or uses a color outside its palette.
bool is_proper(const Graph& g, const Coloring& c);

struct Recoloring {
  Vertex vertex = 0;
  Color color = 0;

  friend bool operator==(const Recoloring&, const Recoloring&) = default;
};

struct TightColoringResult {
  bool tight = true;
  /// Least (vertex, color) that can be recolored while staying proper.
  std::optional<Recoloring> witness;
};

/// Tightness of a proper coloring relative to its own palette.
/// ImproperColoring if `c` is not proper.
TightColoringResult is_tight_coloring(const Graph& g, const Coloring& c);

struct TightGraphResult {
  bool tight = true;
  std::size_t chi = 0;
  /// First non-tight chi-coloring found, with its witness.
  std::optional<Coloring> coloring;
  std::optional<Recoloring> witness;
};

/// Whether every proper chi(g)-coloring of g is tight. DomainError on the
/// empty graph.
TightGraphResult is_tight_graph(const Graph& g, WorkBudget* budget = nullptr);

/// Applies a single-vertex recoloring.
Coloring recolor(const Coloring& c, const Recoloring& change);

}  // namespace powercolor
