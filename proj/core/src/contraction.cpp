#include "treelang/contraction.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

namespace treelang {

namespace {

int find_rep(std::vector<int>& up, int x) {
  while (up[x] != x) {
    up[x] = up[up[x]];
    x = up[x];
  }
  return x;
}

}  // namespace

std::optional<std::vector<EdgeImage>> edge_map(
    const std::vector<int>& vertex_map, const PlanarTree& source,
    const PlanarTree& target) {
  std::vector<EdgeImage> images(source.n_vertices());
  for (int v = 1; v < source.n_vertices(); ++v) {
    int a = vertex_map[v];
    int b = vertex_map[source.parent(v)];
    if (a == b) {
      images[v] = {true, a};
    } else if (target.parent(a) == b) {
      images[v] = {false, a};
    } else if (target.parent(b) == a) {
      images[v] = {false, b};
    } else {
      return std::nullopt;
    }
  }
  return images;
}

namespace {

std::optional<std::string> contraction_violation(
    const std::vector<int>& vertex_map, const PlanarTree& source,
    const PlanarTree& target) {
  if (static_cast<int>(vertex_map.size()) != source.n_vertices()) {
    return "vertex map not total on source vertices";
  }
  for (int img : vertex_map) {
    if (img < 0 || img >= target.n_vertices()) return "image out of range";
  }
  std::vector<char> hit(target.n_vertices(), 0);
  for (int img : vertex_map) hit[img] = 1;
  for (int t = 0; t < target.n_vertices(); ++t) {
    if (!hit[t]) {
      return "not surjective: target vertex " + std::to_string(t) + " unhit";
    }
  }
  auto em = edge_map(vertex_map, source, target);
  if (!em) return "a source edge joins non-adjacent image vertices";
  // each target vertex preimage connected under collapsed edges
  std::vector<int> up(source.n_vertices());
  std::iota(up.begin(), up.end(), 0);
  for (int v = 1; v < source.n_vertices(); ++v) {
    if (vertex_map[v] == vertex_map[source.parent(v)]) {
      up[find_rep(up, v)] = find_rep(up, source.parent(v));
    }
  }
  std::vector<int> rep(target.n_vertices(), -1);
  for (int v = 0; v < source.n_vertices(); ++v) {
    int t = vertex_map[v];
    int r = find_rep(up, v);
    if (rep[t] == -1) {
      rep[t] = r;
    } else if (rep[t] != r) {
      return "preimage of target vertex " + std::to_string(t) +
             " is disconnected";
    }
  }
  std::vector<int> covers(target.n_vertices(), 0);
  for (int v = 1; v < source.n_vertices(); ++v) {
    if (!(*em)[v].collapsed) ++covers[(*em)[v].index];
  }
  for (int e = 1; e < target.n_vertices(); ++e) {
    if (covers[e] != 1) {
      return "target edge e" + std::to_string(e) + " has " +
             std::to_string(covers[e]) + " edge preimages";
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_contraction(const std::vector<int>& vertex_map,
                    const PlanarTree& source, const PlanarTree& target) {
  return !contraction_violation(vertex_map, source, target).has_value();
}

std::optional<std::string> planar_contraction_violation(
    const std::vector<int>& vertex_map, const PlanarTree& source,
    const PlanarTree& target) {
  if (auto why = contraction_violation(vertex_map, source, target)) return why;
  if (vertex_map[0] != 0) return "root not preserved";
  std::vector<int> min_pre(target.n_vertices(), -1);
  for (int v = source.n_vertices() - 1; v >= 0; --v) min_pre[vertex_map[v]] = v;
  for (int t = 0; t + 1 < target.n_vertices(); ++t) {
    if (min_pre[t] >= min_pre[t + 1]) {
      return "planar order violated between target vertices " +
             std::to_string(t) + " and " + std::to_string(t + 1);
    }
  }
  return std::nullopt;
}

bool is_rooted_contraction(const Contraction& c) {
  return is_contraction(c.vertex_map, c.source, c.target) &&
         c.vertex_map[0] == 0;
}

bool is_planar_contraction(const Contraction& c) {
  return !planar_contraction_violation(c.vertex_map, c.source, c.target)
              .has_value();
}

std::vector<Contraction> enumerate_planar_contractions(
    const PlanarTree& source, const PlanarTree& target) {
  std::vector<Contraction> out;
  if (source.n_edges() < target.n_edges()) return out;
  const int n = source.n_vertices();
  const int m = target.n_vertices();
  std::vector<int> vmap(n, 0);
  // assign source vertices in order; prune on local adjacency: the image of
  // v must equal or be adjacent to the image of parent(v)
  std::function<void(int)> rec = [&](int v) {
    if (v == n) {
      if (!planar_contraction_violation(vmap, source, target)) {
        out.push_back({source, target, vmap});
      }
      return;
    }
    int p = vmap[source.parent(v)];
    for (int img = 0; img < m; ++img) {
      if (img != p && target.parent(img) != p && target.parent(p) != img) {
        continue;
      }
      vmap[v] = img;
      rec(v + 1);
    }
    vmap[v] = 0;
  };
  rec(1);
  return out;
}

Contraction identity_contraction(const PlanarTree& tree) {
  std::vector<int> vmap(tree.n_vertices());
  std::iota(vmap.begin(), vmap.end(), 0);
  return {tree, tree, vmap};
}

Contraction compose(const Contraction& f, const Contraction& g) {
  if (!(f.target == g.source)) {
    throw std::invalid_argument("compose: f.target differs from g.source");
  }
  std::vector<int> vmap(f.source.n_vertices());
  for (int v = 0; v < f.source.n_vertices(); ++v) {
    vmap[v] = g.vertex_map[f.vertex_map[v]];
  }
  return {f.source, g.target, vmap};
}

}  // namespace treelang
