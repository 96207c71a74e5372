#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <json.hpp>

#include "powercolor/coloring.hpp"
#include "powercolor/graph.hpp"

namespace powercolor {

using Block = std::vector<std::size_t>;

/// Partition of the index set {0, ..., n-1} into non-empty blocks. Stored
/// normalized: each block sorted, blocks ordered by minimum element.
class Partition {
 public:
  Partition() = default;
  /// DomainError unless the blocks are non-empty, disjoint and cover {0..n-1}.
  Partition(std::size_t n, std::vector<Block> blocks);

  static Partition discrete(std::size_t n);
  /// The single block {0..n-1}; no blocks when n = 0.
  static Partition trivial(std::size_t n);

  std::size_t index_count() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  const Block& block(std::size_t b) const { return blocks_[b]; }
  std::size_t block_of(std::size_t i) const { return block_of_[i]; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_of_;
};

/// Every partition of {0..n-1} (Bell(n) of them) in restricted-growth order.
std::vector<Partition> all_partitions(std::size_t n);

/// Every block of `fine` lies inside a block of `coarse`. DomainError if the
/// index sets differ.
bool refines(const Partition& fine, const Partition& coarse);

/// Greatest common refinement: the non-empty pairwise block intersections.
Partition meet(const Partition& a, const Partition& b);

struct RestrictedColoring {
  /// The power G^m, m = number of blocks.
  ProductSpace space;
  Coloring coloring;
  /// Block j of the partition supplies coordinate j.
  std::vector<Block> block_order;
};

/// Pulls c back along w -> v with v_xi = w_j for every xi in block j, the
/// isomorphism between G^m and the block-constant vertices. `ps` must be a
/// power whose exponent is the partition's index count. ImproperColoring if
/// c is not proper.
RestrictedColoring restrict_to_partition(const ProductSpace& ps, const Coloring& c,
                                         const Partition& p);

/// The block whose coordinate determines the restricted coloring.
/// NontrivialColoring if the restriction is not trivial.
Block index_block(const ProductSpace& ps, const Coloring& c, const Partition& p);

struct PrincipalUltrafilterWitness {
  std::size_t generator = 0;
  Coloring factor_coloring;

  friend bool operator==(const PrincipalUltrafilterWitness&,
                         const PrincipalUltrafilterWitness&) = default;
};

/// Generator from the discrete partition; the factor coloring is c on the
/// diagonal. Checks c = factor_coloring o pi_generator on every vertex
/// (InternalError on failure). NontrivialColoring if c is not trivial.
PrincipalUltrafilterWitness extract_ultrafilter(const ProductSpace& ps, const Coloring& c);

/// v -> phi(v_i) on g^n. ImproperColoring if phi is improper; DomainError
/// if i >= n; CapacityError past the vertex limit.
Coloring ultrafilter_coloring(const Graph& g, const Coloring& phi, std::size_t i,
                              std::size_t n, const ProductLimits& limits = {});

/// Subsets of a small index set as bitmasks, n <= 20.
using IndexMask = std::uint32_t;

IndexMask to_mask(std::span<const std::size_t> indices);

/// All supersets of at least one generator, sorted ascending.
std::vector<IndexMask> upward_closure(std::span<const IndexMask> generators, std::size_t n);

/// Whether `family` is an ultrafilter on {0..n-1}: a proper filter holding
/// exactly one of S and its complement for every S.
bool is_ultrafilter(std::span<const IndexMask> family, std::size_t n);

/// {S : i in S}, sorted ascending.
std::vector<IndexMask> principal_filter(std::size_t i, std::size_t n);

/// Sorted list of sorted index lists.
nlohmann::json to_json(const Partition& p);
/// The index set is inferred as {0..max}; DomainError if not covered.
Partition partition_from_json(const nlohmann::json& j);

}  // namespace powercolor
