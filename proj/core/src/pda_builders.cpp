#include "treelang/pda_builders.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace treelang {

EulerTour euler_tour(const PlanarTree& tree) {
  EulerTour tour;
  tour.events.reserve(2 * static_cast<std::size_t>(tree.n_edges()));
  std::function<void(int)> visit = [&](int v) {
    for (int c : tree.children(v)) {
      tour.events.push_back({c, EulerTour::Phase::kUp});
      visit(c);
      tour.events.push_back({c, EulerTour::Phase::kDown});
    }
  };
  visit(0);
  return tour;
}

Pda build_catalan_pda() {
  std::vector<std::string> states{"q0", "q1"};
  std::vector<std::string> alphabet{"u", "d"};
  std::vector<std::string> stack{"Z", "A"};
  std::vector<Pda::Rule> rules{
      {0, 0, 0, 0, {1, 0}},         // delta(q0,u,Z) = (q0,AZ)
      {0, 0, 1, 0, {1, 1}},         // delta(q0,u,A) = (q0,AA)
      {0, 1, 1, 0, {}},             // delta(q0,d,A) = (q0,eps)
      {0, Pda::kEps, 0, 1, {}},     // delta(q0,eps,Z) = (q1,eps)
  };
  return Pda(std::move(states), std::move(alphabet), std::move(stack),
             std::move(rules), 0, 0, {1});
}

namespace {

// Shared alphabet and naming for the tree automaton family.
struct TreePdaParts {
  std::vector<std::string> states;   // q0, tour states, qf
  std::vector<std::string> alphabet; // u0 d0 u1 d1 ...
  std::vector<std::string> stack;    // Z A0 A1 ...
  std::vector<int> state_vertex;     // vertex the state maps onto (-1 for qf)
  // advance[i]: tour successor of state i (the next state in the walk)
  // kinds classify i -> i+1
};

std::string tour_state_name(const EulerTour::Event& ev) {
  return std::string("q_e") + std::to_string(ev.edge) +
         (ev.phase == EulerTour::Phase::kUp ? "u" : "d");
}

TreePdaParts tree_pda_parts(const PlanarTree& tree) {
  TreePdaParts parts;
  const EulerTour tour = euler_tour(tree);
  parts.states.push_back("q0");
  parts.state_vertex.push_back(0);
  for (const auto& ev : tour.events) {
    parts.states.push_back(tour_state_name(ev));
    parts.state_vertex.push_back(ev.phase == EulerTour::Phase::kUp
                                     ? ev.edge
                                     : tree.parent(ev.edge));
  }
  parts.states.push_back("qf");
  parts.state_vertex.push_back(-1);
  for (int v = 0; v < tree.n_vertices(); ++v) {
    parts.alphabet.push_back("u" + std::to_string(v));
    parts.alphabet.push_back("d" + std::to_string(v));
  }
  parts.stack.push_back("Z");
  for (int v = 0; v < tree.n_vertices(); ++v) {
    parts.stack.push_back("A" + std::to_string(v));
  }
  return parts;
}

constexpr int kZ = 0;
int sym_A(int v) { return v + 1; }
int letter_u(int v) { return 2 * v; }
int letter_d(int v) { return 2 * v + 1; }

}  // namespace

Pda build_tree_pda(const PlanarTree& tree) {
  TreePdaParts parts = tree_pda_parts(tree);
  const int n_states = static_cast<int>(parts.states.size());
  const int qf = n_states - 1;
  std::vector<Pda::Rule> rules;
  for (int s = 0; s + 1 < n_states; ++s) {
    const int v = parts.state_vertex[s];
    const int nxt = s + 1;
    // self-loops reading u_v / d_v around the current vertex
    if (s == 0) {
      rules.push_back({s, letter_u(0), Pda::kEps, s, {sym_A(0)}});
      rules.push_back({s, letter_d(0), sym_A(0), s, {}});
    } else if (v == 0) {
      rules.push_back({s, letter_u(0), sym_A(0), s, {sym_A(0), sym_A(0)}});
      rules.push_back({s, letter_u(0), kZ, s, {sym_A(0), kZ}});
      rules.push_back({s, letter_d(0), sym_A(0), s, {}});
    } else {
      rules.push_back({s, letter_u(v), sym_A(v), s, {sym_A(v), sym_A(v)}});
      rules.push_back({s, letter_d(v), sym_A(v), s, {}});
    }
    // advance to the tour successor
    if (nxt == qf) {
      rules.push_back({s, Pda::kEps, kZ, qf, {}});
    } else {
      const int w = parts.state_vertex[nxt];
      const bool next_is_up = parts.states[nxt].back() == 'u';
      if (next_is_up) {
        if (s == 0 || v == 0) {
          rules.push_back({s, letter_u(w), Pda::kEps, nxt, {sym_A(w)}});
        } else {
          rules.push_back(
              {s, letter_u(w), sym_A(v), nxt, {sym_A(w), sym_A(v)}});
        }
      } else {
        // epsilon-move down the tree, inspecting the exposed symbol
        rules.push_back({s, Pda::kEps, sym_A(w), nxt, {sym_A(w)}});
        if (w == 0) {
          rules.push_back({s, Pda::kEps, kZ, nxt, {kZ}});
        }
      }
    }
  }
  return Pda(parts.states, parts.alphabet, parts.stack, std::move(rules), 0,
             kZ, {qf});
}

namespace {

// ----- pattern automata -----
//
// Progress-transfer relation of one pattern across a balanced host factor:
// the set of pairs (g, g') such that reading the factor can move the matched
// pattern prefix from g letters to g', with every pattern pair opened inside
// the factor also closed inside it.  Relations compose sequentially; one
// host pair u_x [inside] d_x acts as
//     R  |->  R  union  { (g, pi(g)+1) : p[g] = u_x, (g+1, pi(g)) in R }
// where the added pairs use the host pair itself for the pattern pair
// (g, pi(g)).

using Relation = std::vector<std::pair<int, int>>;  // sorted, unique

Relation identity_relation(int length) {
  Relation r;
  r.reserve(length + 1);
  for (int g = 0; g <= length; ++g) r.emplace_back(g, g);
  return r;
}

Relation compose_relations(const Relation& first, const Relation& second) {
  std::set<std::pair<int, int>> out;
  for (const auto& [a, b] : first) {
    auto lo = std::lower_bound(second.begin(), second.end(),
                               std::make_pair(b, -1));
    for (auto it = lo; it != second.end() && it->first == b; ++it) {
      out.emplace(a, it->second);
    }
  }
  return Relation(out.begin(), out.end());
}

struct PatternInfo {
  MorphismWord word;
  std::vector<int> partner;
};

Relation absorb_host_pair(const PatternInfo& pat, const Relation& inside,
                          int label) {
  std::set<std::pair<int, int>> out(inside.begin(), inside.end());
  const int L = static_cast<int>(pat.word.letters.size());
  for (int g = 0; g < L; ++g) {
    if (pat.word.letters[g] == Letter{Dir::kUp, label}) {
      const int close = pat.partner[g];
      if (pat.word.letters[close] == Letter{Dir::kDown, label} &&
          std::binary_search(inside.begin(), inside.end(),
                             std::make_pair(g + 1, close))) {
        out.emplace(g, close + 1);
      }
    }
  }
  return Relation(out.begin(), out.end());
}

// States and stack symbols of the product machine are (base, relation-tuple)
// pairs, discovered by fixpoint over reachable combinations.
struct ProductBuild {
  const Pda& base;
  const std::vector<PatternInfo>& patterns;
  using RelTuple = std::vector<Relation>;

  std::vector<std::pair<int, RelTuple>> states;   // product states
  std::vector<std::pair<int, RelTuple>> symbols;  // index 0 reserved for Z
  std::map<std::pair<int, RelTuple>, int> state_ids, symbol_ids;
  std::set<std::tuple<int, int, int, int, std::vector<int>>> row_set;
  std::vector<Pda::Rule> rules;

  explicit ProductBuild(const Pda& b, const std::vector<PatternInfo>& p)
      : base(b), patterns(p) {}

  int state_id(int base_state, const RelTuple& rels) {
    auto [it, fresh] = state_ids.try_emplace({base_state, rels},
                                             static_cast<int>(states.size()));
    if (fresh) states.push_back({base_state, rels});
    return it->second;
  }

  int symbol_id(int base_sym, const RelTuple& rels) {
    auto [it, fresh] = symbol_ids.try_emplace({base_sym, rels},
                                              static_cast<int>(symbols.size()));
    if (fresh) symbols.push_back({base_sym, rels});
    return it->second;
  }

  void add_rule(int from, int input, int top, int to, std::vector<int> push) {
    auto key = std::make_tuple(from, input, top, to, push);
    if (row_set.insert(key).second) {
      rules.push_back({from, input, top, to, std::move(push)});
    }
  }

  RelTuple identities() const {
    RelTuple t;
    for (const auto& p : patterns) {
      t.push_back(identity_relation(static_cast<int>(p.word.letters.size())));
    }
    return t;
  }
};

int letter_label(int letter) { return letter / 2; }
bool letter_is_up(int letter) { return letter % 2 == 0; }

}  // namespace

Pda build_ideal_pda(const std::vector<MorphismWord>& pattern_words,
                    const PlanarTree& tree) {
  const Pda base = build_tree_pda(tree);
  std::vector<PatternInfo> patterns;
  for (const MorphismWord& p : pattern_words) {
    if (p.target_vertices != tree.n_vertices()) {
      throw std::invalid_argument("pattern over a different alphabet");
    }
    if (!accepts(base, to_pda_word(base, p))) {
      throw std::invalid_argument("pattern is not a morphism word of L_T");
    }
    patterns.push_back({p, p.letters.empty() ? std::vector<int>{}
                                             : matching(p)});
  }

  ProductBuild build(base, patterns);
  using RelTuple = ProductBuild::RelTuple;
  const int kSymZ = build.symbol_id(-1, {});  // reserved Z = index 0
  (void)kSymZ;
  const int start = build.state_id(base.initial_state(), build.identities());
  (void)start;

  // fixpoint over reachable product states and stack symbols
  std::size_t done_states = 0, done_symbols = 1, done_pairs = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n_states = build.states.size();
    const std::size_t n_symbols = build.symbols.size();
    for (std::size_t si = 0; si < n_states; ++si) {
      const auto [bs, R] = build.states[si];
      for (std::size_t ri = 0; ri < base.rules().size(); ++ri) {
        const Pda::Rule& rule = base.rules()[ri];
        if (rule.from != bs) continue;
        if (rule.input != Pda::kEps && letter_is_up(rule.input)) {
          // push moves: save R on the new cell, restart with identities
          const RelTuple fresh = build.identities();
          const int to = build.state_id(rule.to, fresh);
          const int pushed = build.symbol_id(rule.push.front(), R);
          if (rule.top == Pda::kEps) {
            build.add_rule(static_cast<int>(si), rule.input, Pda::kEps, to,
                           {pushed});
          } else if (rule.top == kZ) {
            build.add_rule(static_cast<int>(si), rule.input, 0, to,
                           {pushed, 0});
          } else {
            // keyed on every reachable stamped variant of rule.top
            for (std::size_t yi = 1; yi < n_symbols; ++yi) {
              if (build.symbols[yi].first == rule.top) {
                build.add_rule(static_cast<int>(si), rule.input,
                               static_cast<int>(yi), to,
                               {pushed, static_cast<int>(yi)});
              }
            }
          }
        } else if (rule.input != Pda::kEps) {
          // pop moves: combine the saved relation with the inside one
          const int label = letter_label(rule.input);
          for (std::size_t yi = 1; yi < n_symbols; ++yi) {
            if (build.symbols[yi].first != rule.top) continue;
            const RelTuple& saved = build.symbols[yi].second;
            RelTuple combined;
            combined.reserve(patterns.size());
            for (std::size_t k = 0; k < patterns.size(); ++k) {
              combined.push_back(compose_relations(
                  saved[k], absorb_host_pair(patterns[k], R[k], label)));
            }
            const int to = build.state_id(rule.to, combined);
            build.add_rule(static_cast<int>(si), rule.input,
                           static_cast<int>(yi), to, {});
          }
        } else {
          // epsilon moves never touch the pattern layer
          if (rule.top == kZ) {
            const int to = build.state_id(rule.to, R);
            std::vector<int> push;
            if (!rule.push.empty()) push.push_back(0);
            build.add_rule(static_cast<int>(si), Pda::kEps, 0, to,
                           std::move(push));
          } else {
            for (std::size_t yi = 1; yi < n_symbols; ++yi) {
              if (build.symbols[yi].first == rule.top) {
                const int to = build.state_id(rule.to, R);
                build.add_rule(static_cast<int>(si), Pda::kEps,
                               static_cast<int>(yi), to,
                               {static_cast<int>(yi)});
              }
            }
          }
        }
      }
    }
    if (build.states.size() != done_states ||
        build.symbols.size() != done_symbols ||
        build.rules.size() != done_pairs) {
      done_states = build.states.size();
      done_symbols = build.symbols.size();
      done_pairs = build.rules.size();
      changed = true;
    }
  }

  // naming: relation tuples are interned in discovery order
  std::map<RelTuple, int> rel_names;
  auto rel_name = [&](const RelTuple& t) {
    auto [it, fresh] =
        rel_names.try_emplace(t, static_cast<int>(rel_names.size()));
    (void)fresh;
    return "r" + std::to_string(it->second);
  };
  std::vector<std::string> state_names;
  for (const auto& [bs, R] : build.states) {
    state_names.push_back(base.states()[bs] + "#" + rel_name(R));
  }
  std::vector<std::string> symbol_names{"Z"};
  for (std::size_t i = 1; i < build.symbols.size(); ++i) {
    const auto& [bsym, R] = build.symbols[i];
    symbol_names.push_back(base.stack_symbols()[bsym] + "#" + rel_name(R));
  }
  std::vector<int> finals;
  for (std::size_t i = 0; i < build.states.size(); ++i) {
    const auto& [bs, R] = build.states[i];
    if (!base.is_final(bs)) continue;
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      const int L = static_cast<int>(patterns[k].word.letters.size());
      if (std::binary_search(R[k].begin(), R[k].end(),
                             std::make_pair(0, L))) {
        finals.push_back(static_cast<int>(i));
        break;
      }
    }
  }
  return Pda(std::move(state_names), base.alphabet(), std::move(symbol_names),
             std::move(build.rules), 0, 0, std::move(finals));
}

Pda build_pattern_pda(const MorphismWord& pattern, const PlanarTree& tree) {
  return build_ideal_pda({pattern}, tree);
}

}  // namespace treelang
