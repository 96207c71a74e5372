#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powercolor/graph.hpp"

namespace powercolor {

/// Largest order for which exhaustive generation is offered.
inline constexpr std::size_t kMaxExhaustiveOrder = 8;

/// Isomorphism-invariant graph6 string: the least graph6 encoding over all
/// relabelings that list vertices by ascending degree. Orders up to 32.
std::string canonical_graph6(const Graph& g);

/// The graph relabeled into its canonical order.
Graph canonical_form(const Graph& g);

/// One representative per isomorphism class on n vertices, in canonical
/// form, sorted by canonical graph6. Built by vertex augmentation with
/// canonical deduplication; parents are processed on an OpenMP pool.
/// DomainError above kMaxExhaustiveOrder.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

namespace serial {
std::vector<Graph> nonisomorphic_graphs(std::size_t n);
}  // namespace serial

/// All classes of order 1..max_n, optionally only the connected ones.
std::vector<Graph> nonisomorphic_graphs_up_to(std::size_t max_n, bool connected_only = false);

/// `count` labeled G(n, p) samples from a seeded 64-bit Mersenne twister.
std::vector<Graph> random_graphs(std::size_t n, std::size_t count, std::uint64_t seed,
                                 double p = 0.5);

}  // namespace powercolor
