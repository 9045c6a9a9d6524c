#pragma once

#include <compare>
#include <string>
#include <vector>

#include "treelang/contraction.hpp"
#include "treelang/tree.hpp"

namespace treelang {

enum class Dir : char { kUp = 'u', kDown = 'd' };

/// One letter u_k / d_k of the subscripted alphabet of a target tree.
struct Letter {
  Dir dir;
  int label;

  auto operator<=>(const Letter&) const = default;
};

/// A word over the subscripted alphabet Sigma_T = {u_k, d_k}.  The direction
/// projection of a well-formed word is a Dyck word; target_vertices records
/// the alphabet size (labels run over 0..target_vertices-1).
struct MorphismWord {
  std::vector<Letter> letters;
  int target_vertices = 1;

  std::size_t size() const { return letters.size(); }
  auto operator<=>(const MorphismWord&) const = default;
};

/// "u0 d0 u1 ..." with whitespace-separated tokens.
std::string to_string(const MorphismWord& word);

/// Parses whitespace-separated u<k>/d<k> tokens (case-insensitive); throws
/// std::invalid_argument on malformed tokens or labels out of range.
MorphismWord parse_morphism_word(const std::string& text, int target_vertices);

/// Word of a planar contraction: the Dyck word of the source, each letter
/// subscripted by the image of the traversed edge's endpoint farther from
/// the root.  Matched letters therefore carry equal subscripts.
MorphismWord encode(const Contraction& c);

/// Rebuilds the source tree from the direction projection and reads the
/// vertex map off the up-letters (the root maps to the root).  Total on
/// words with a Dyck direction projection, even when the result fails
/// is_contraction; throws otherwise.
Contraction decode(const MorphismWord& word, const PlanarTree& target);

/// All morphism words of planar contractions into `target` from sources
/// with at most max_edges edges, sorted by length then lexicographically.
std::vector<MorphismWord> language_LT(const PlanarTree& target, int max_edges);

/// Position of the partner letter, by nested matching of the direction
/// projection; throws on non-Dyck projections.
std::vector<int> matching(const MorphismWord& word);

/// True iff `small` embeds into `big` by a strictly increasing,
/// letter-preserving map sending matched pairs to matched pairs.
bool strong_contains(const MorphismWord& big, const MorphismWord& small);

/// Per-position section labels from the canonical accepting run of the tree
/// automaton P_T: each letter is tagged with the state that consumed it
/// ("q0" for the initial section, "q_e<k>u" / "q_e<k>d" otherwise).  Throws
/// if P_T rejects the word.
struct Sections {
  std::vector<std::string> state_of_position;
};
Sections sections(const MorphismWord& word, const PlanarTree& target);

}  // namespace treelang
