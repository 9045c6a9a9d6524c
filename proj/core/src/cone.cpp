#include "treelang/cone.hpp"

#include <stdexcept>

namespace treelang {

ConeGraph cone(const PlanarTree& tree) {
  ConeGraph g;
  const int n = tree.n_vertices();
  g.n_vertices = n + 1;
  g.apex = n;
  g.adjacency.resize(g.n_vertices);
  auto add_edge = [&](int a, int b) {
    g.edges.emplace_back(a, b);
    g.adjacency[a].push_back(b);
    g.adjacency[b].push_back(a);
  };
  for (int v = 1; v < n; ++v) add_edge(tree.parent(v), v);
  for (int v = 0; v < n; ++v) add_edge(v, g.apex);
  return g;
}

int rank1_flat_count(const ConeGraph& g) {
  return static_cast<int>(g.edges.size());
}

namespace {

bool subset_connected(const ConeGraph& g, std::uint32_t mask) {
  int start = -1;
  for (int v = 0; v < g.n_vertices; ++v) {
    if (mask >> v & 1) {
      start = v;
      break;
    }
  }
  if (start < 0) return false;
  std::uint32_t seen = 1u << start;
  std::vector<int> frontier{start};
  while (!frontier.empty()) {
    int v = frontier.back();
    frontier.pop_back();
    for (int w : g.adjacency[v]) {
      if ((mask >> w & 1) && !(seen >> w & 1)) {
        seen |= 1u << w;
        frontier.push_back(w);
      }
    }
  }
  return seen == mask;
}

}  // namespace

std::int64_t corank1_flat_count(const ConeGraph& g) {
  if (g.n_vertices > 30) throw std::invalid_argument("graph too large");
  const std::uint32_t full = (1u << g.n_vertices) - 1;
  if (!subset_connected(g, full)) {
    throw std::invalid_argument("graph is disconnected");
  }
  std::int64_t count = 0;
  // fix vertex 0 in one block to count unordered partitions once
  for (std::uint32_t mask = 1; mask < full; mask += 2) {
    if (subset_connected(g, mask) && subset_connected(g, full & ~mask)) {
      ++count;
    }
  }
  return count;
}

std::int64_t kl1_formula(const PlanarTree& tree) {
  const ConeGraph g = cone(tree);
  return corank1_flat_count(g) - rank1_flat_count(g);
}

}  // namespace treelang
