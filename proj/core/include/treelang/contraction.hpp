#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treelang/tree.hpp"

namespace treelang {

/// A vertex-and-edge map between trees in the sense of tree contractions:
/// source is the bigger tree T', target the smaller T, and vertex_map sends
/// each source vertex to a target vertex.  The edge behaviour is derived: a
/// source edge collapses to the common image vertex, or covers the target
/// edge between the two images.  Stored maps are not checked; use
/// is_contraction / is_planar_contraction.
struct Contraction {
  PlanarTree source;
  PlanarTree target;
  std::vector<int> vertex_map;

  bool operator==(const Contraction&) const = default;
};

/// Image of one source edge under the derived edge map.
struct EdgeImage {
  bool collapsed;  // true: image is target vertex `index`; false: target edge
  int index;       // vertex index, or the far endpoint naming a target edge

  bool operator==(const EdgeImage&) const = default;
};

/// Derived edge map, or nullopt when some source edge joins vertices whose
/// images are distinct and non-adjacent.
std::optional<std::vector<EdgeImage>> edge_map(
    const std::vector<int>& vertex_map, const PlanarTree& source,
    const PlanarTree& target);

/// True iff the four contraction conditions hold: vertex surjectivity, a
/// unique source edge over every target edge, endpoint compatibility, and
/// connected preimages.
bool is_contraction(const std::vector<int>& vertex_map,
                    const PlanarTree& source, const PlanarTree& target);

/// Human-readable reason why the map fails to be a planar contraction, or
/// nullopt if it is one.  Checks the contraction conditions first, then root
/// preservation, then the planar order condition.
std::optional<std::string> planar_contraction_violation(
    const std::vector<int>& vertex_map, const PlanarTree& source,
    const PlanarTree& target);

bool is_rooted_contraction(const Contraction& c);

/// Rooted, and the depth-first-minimal source vertices of the target-vertex
/// preimages appear in increasing order.
bool is_planar_contraction(const Contraction& c);

/// All planar contractions source -> target, ordered lexicographically by
/// vertex_map.  Empty when the source has fewer edges than the target.
std::vector<Contraction> enumerate_planar_contractions(
    const PlanarTree& source, const PlanarTree& target);

Contraction identity_contraction(const PlanarTree& tree);

/// Composition of contractions A -> B -> C; throws std::invalid_argument
/// when f's target differs from g's source.
Contraction compose(const Contraction& f, const Contraction& g);

}  // namespace treelang
