#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace treelang {

/// An ordered rooted tree with depth-first vertex numbering.
///
/// Vertices are numbered 0..n-1 in depth-first order starting from the root
/// (vertex 0), visiting the leftmost child first; the per-vertex child lists
/// keep that planar order.  Edges are named by the endpoint farther from the
/// root, so edge k (1 <= k < n) joins k and parent(k).
///
/// Instances are immutable and always satisfy the numbering invariant; the
/// factory functions throw std::invalid_argument on inconsistent input.
class PlanarTree {
 public:
  static constexpr int kRootSentinel = -1;

  /// Builds from a parent sequence; children are ordered by vertex index,
  /// which is the unique planar order compatible with depth-first numbering.
  static PlanarTree from_parents(std::vector<int> parent);

  /// Builds from explicit parent sequence and child lists.
  static PlanarTree from_parts(std::vector<int> parent,
                               std::vector<std::vector<int>> children);

  /// The single-vertex tree.
  static PlanarTree single_vertex();

  int n_vertices() const { return static_cast<int>(parent_.size()); }
  int n_edges() const { return n_vertices() - 1; }
  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& parent_sequence() const { return parent_; }
  const std::vector<int>& children(int v) const { return children_[v]; }

  bool operator==(const PlanarTree& other) const = default;

 private:
  friend class TreeBuilder;
  PlanarTree() = default;

  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

/// Total validity predicate for candidate (parent, children) data: true iff
/// the structure is a tree rooted at 0 whose stored numbering equals its own
/// depth-first numbering with leftmost-child-first traversal.
bool validate(const std::vector<int>& parent,
              const std::vector<std::vector<int>>& children);

/// Incremental construction of a PlanarTree along a depth-first walk.
/// push_child() adds a new vertex below the cursor and descends to it,
/// ascend() moves the cursor back up.  tree() is a valid view whenever the
/// number of pushes equals the number of ascends.  undo_push_child() and
/// descend() exactly invert push_child()/ascend(), so enumeration code can
/// backtrack without rebuilding; reusing one builder across many walks
/// avoids reallocation.
class TreeBuilder {
 public:
  TreeBuilder();

  void push_child();
  void ascend();
  /// Inverse of push_child(): the cursor must be the most recently created
  /// vertex and still childless.
  void undo_push_child();
  /// Inverse of ascend(): moves the cursor to the given child.
  void descend(int child);
  /// Drops everything, leaving the single root vertex.
  void reset();

  int cursor() const { return cursor_; }
  const PlanarTree& tree() const { return tree_; }

 private:
  PlanarTree tree_;
  int cursor_ = 0;
};

/// Canonical code of a rooted or unrooted tree; equal codes iff isomorphic.
using TreeCanonicalForm = std::string;

/// Undirected vertex degrees: the root contributes its child count, every
/// other vertex its child count plus one.
std::vector<int> degree_sequence(const PlanarTree& tree);

/// Sum over vertices of C(deg v, 2).
std::int64_t star_norm(const PlanarTree& tree);

/// Number of degree-1 vertices of the underlying tree; the single-vertex
/// tree counts as one leaf, and a root with exactly one child is a leaf.
int leaf_count(const PlanarTree& tree);

/// Number of nonempty connected subgraphs of the underlying tree, single
/// vertices included.
std::int64_t subtree_count(const PlanarTree& tree);

/// Canonical form of the underlying rooted tree (child order forgotten).
TreeCanonicalForm canonical_rooted(const PlanarTree& tree);

/// Canonical form of the underlying bare tree: minimum of canonical_rooted
/// over all re-rootings.
TreeCanonicalForm canonical_unrooted(const PlanarTree& tree);

/// Parses a tree given either as a Dyck word ("uududd") or as a
/// comma-separated parent sequence ("-,0,1,1").
PlanarTree parse_tree(const std::string& text);

/// Renders the parent sequence in the comma-separated external form.
std::string format_parents(const PlanarTree& tree);

}  // namespace treelang
