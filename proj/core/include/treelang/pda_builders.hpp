#pragma once

#include <vector>

#include "treelang/morphism.hpp"
#include "treelang/pda.hpp"
#include "treelang/tree.hpp"

namespace treelang {

/// Euler tour of a planar tree: each edge appears once per phase, up before
/// down, in depth-first order.  The tour drives the tree automaton's state
/// sequence, resolving "smallest unvisited outgoing edge" statically.
struct EulerTour {
  enum class Phase : char { kUp = 'u', kDown = 'd' };
  struct Event {
    int edge;  // named by its endpoint farther from the root
    Phase phase;
  };
  std::vector<Event> events;
};

EulerTour euler_tour(const PlanarTree& tree);

/// The two-state automaton recognizing Dyck words over {u, d}.
Pda build_catalan_pda();

/// The tree automaton P_T over the subscripted alphabet of T.  States are
/// q0, one q_e<k>u / q_e<k>d pair per edge in Euler-tour order, and qf;
/// stack symbols are Z and one A<v> per vertex.  Accepts exactly the
/// morphism words of planar contractions onto T.
Pda build_tree_pda(const PlanarTree& tree);

/// Unambiguous automaton for the morphism words of L_T strongly containing
/// `pattern`.  Product of P_T with a progress-transfer layer: the state
/// carries the relation of pattern-prefix progresses achievable across the
/// balanced factor read since the enclosing unmatched up-letter, and pops
/// compose the saved enclosing relation with the inside one.  Throws when
/// the pattern is not itself in L_T.
Pda build_pattern_pda(const MorphismWord& pattern, const PlanarTree& tree);

/// Same for the union over several patterns (the order ideal they
/// generate): one relation per pattern, accepting when any is complete.
Pda build_ideal_pda(const std::vector<MorphismWord>& patterns,
                    const PlanarTree& tree);

}  // namespace treelang
