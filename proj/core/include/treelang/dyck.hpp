#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "treelang/bigint.hpp"
#include "treelang/tree.hpp"

namespace treelang {

/// A Dyck word is kept as a lowercase string over {u, d} with balanced
/// letter counts and no prefix carrying more d's than u's.
using DyckWord = std::string;

/// True iff `letters` (case-insensitive) is a Dyck word.
bool validate_dyck(std::string_view letters);

/// Lowercases and validates; throws std::invalid_argument otherwise.
DyckWord parse_dyck(std::string_view letters);

/// All Dyck words with `n_edges` u's, in lexicographic order with u < d.
std::vector<DyckWord> enumerate_dyck(int n_edges);

/// Streaming form of enumerate_dyck, same order.
void visit_dyck(int n_edges, const std::function<void(const DyckWord&)>& fn);

/// n-th Catalan number by the convolution recurrence.
BigInt catalan(int n);

/// The planar rooted tree T_p(w): each u steps up into a new leftmost
/// branch, each d steps back down.  Throws on non-Dyck input.
PlanarTree dyck_to_planar_tree(std::string_view word);

/// Inverse bijection: depth-first reading of the tree.
DyckWord planar_tree_to_dyck(const PlanarTree& tree);

/// For each unrooted isomorphism class with n_edges edges, the number of
/// Dyck words whose tree lies in the class, keyed by canonical_unrooted
/// code.  Values sum to catalan(n_edges).
std::map<TreeCanonicalForm, std::int64_t> p_multiplicity(int n_edges);

}  // namespace treelang
