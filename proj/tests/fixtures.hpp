#pragma once

#include <vector>

#include "powercolor/graph.hpp"

namespace fixtures {

using powercolor::Edge;
using powercolor::Graph;

inline Graph make(std::size_t n, std::vector<Edge> edges) { return Graph(n, edges); }

inline Graph k112() {
  const std::size_t parts[] = {1, 1, 2};
  return powercolor::complete_multipartite(parts);
}

inline Graph k23() {
  const std::size_t parts[] = {2, 3};
  return powercolor::complete_multipartite(parts);
}

inline Graph star3() {
  const std::size_t parts[] = {1, 2};
  return powercolor::complete_multipartite(parts);
}

// Two triangles sharing vertex 2.
inline Graph bowtie() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// Triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
inline Graph bridged_triangles() {
  return make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}});
}

// Triangle with a pendant vertex 3 on vertex 0.
inline Graph pendant_triangle() { return make(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

inline Graph k3_plus_k1() {
  return powercolor::disjoint_union(powercolor::complete_graph(3), powercolor::empty_graph(1));
}

inline Graph k4_minus_edge() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace fixtures
