#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "treelang/tree.hpp"

namespace treelang {

/// Simple graph on the tree's vertices plus an apex adjacent to every one of
/// them; vertices 0..n-1 are the tree's, vertex n is the apex.
struct ConeGraph {
  int n_vertices = 0;
  int apex = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;
};

ConeGraph cone(const PlanarTree& tree);

/// Rank-1 flats of the graphic matroid of a simple graph: one per edge.
int rank1_flat_count(const ConeGraph& g);

/// Corank-1 flats, counted as partitions of the vertex set into two blocks
/// both inducing connected subgraphs.  Throws on a disconnected graph.
std::int64_t corank1_flat_count(const ConeGraph& g);

/// KL_1 of the graphic matroid of cone(T): corank-1 flats minus rank-1
/// flats, which equals subtree_count(T) - (2 |E_T| + 1).
std::int64_t kl1_formula(const PlanarTree& tree);

}  // namespace treelang
