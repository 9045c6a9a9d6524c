#include "treelang/morphism.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "treelang/dyck.hpp"
#include "treelang/pda.hpp"
#include "treelang/pda_builders.hpp"

namespace treelang {

std::string to_string(const MorphismWord& word) {
  std::string out;
  for (std::size_t i = 0; i < word.letters.size(); ++i) {
    if (i) out += ' ';
    out += static_cast<char>(word.letters[i].dir);
    out += std::to_string(word.letters[i].label);
  }
  return out;
}

MorphismWord parse_morphism_word(const std::string& text,
                                 int target_vertices) {
  MorphismWord w;
  w.target_vertices = target_vertices;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) {
    char c = static_cast<char>(std::tolower(static_cast<unsigned char>(tok[0])));
    if ((c != 'u' && c != 'd') || tok.size() < 2) {
      throw std::invalid_argument("bad letter token: " + tok);
    }
    int label;
    try {
      label = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter token: " + tok);
    }
    if (label < 0 || label >= target_vertices) {
      throw std::invalid_argument("label out of range in token: " + tok);
    }
    w.letters.push_back({c == 'u' ? Dir::kUp : Dir::kDown, label});
  }
  return w;
}

MorphismWord encode(const Contraction& c) {
  MorphismWord w;
  w.target_vertices = c.target.n_vertices();
  w.letters.reserve(2 * static_cast<std::size_t>(c.source.n_edges()));
  std::function<void(int)> visit = [&](int v) {
    for (int child : c.source.children(v)) {
      w.letters.push_back({Dir::kUp, c.vertex_map[child]});
      visit(child);
      w.letters.push_back({Dir::kDown, c.vertex_map[child]});
    }
  };
  visit(0);
  return w;
}

Contraction decode(const MorphismWord& word, const PlanarTree& target) {
  DyckWord proj;
  proj.reserve(word.letters.size());
  for (const Letter& l : word.letters) proj.push_back(static_cast<char>(l.dir));
  PlanarTree source = dyck_to_planar_tree(proj);  // throws when not Dyck
  std::vector<int> vmap(source.n_vertices(), 0);
  int next_vertex = 0;
  for (const Letter& l : word.letters) {
    if (l.dir == Dir::kUp) vmap[++next_vertex] = l.label;
  }
  return {std::move(source), target, std::move(vmap)};
}

std::vector<MorphismWord> language_LT(const PlanarTree& target,
                                      int max_edges) {
  std::set<MorphismWord> seen;
  std::vector<MorphismWord> out;
  for (int n = 0; n <= max_edges; ++n) {
    visit_dyck(n, [&](const DyckWord& w) {
      PlanarTree source = dyck_to_planar_tree(w);
      for (const Contraction& c :
           enumerate_planar_contractions(source, target)) {
        MorphismWord mw = encode(c);
        // distinct contractions yield distinct words: the projection
        // recovers the source and the up-letters recover the map
        if (!seen.insert(mw).second) {
          throw std::logic_error("duplicate morphism word");
        }
        out.push_back(std::move(mw));
      }
    });
  }
  std::sort(out.begin(), out.end(), [](const MorphismWord& a,
                                       const MorphismWord& b) {
    if (a.letters.size() != b.letters.size()) {
      return a.letters.size() < b.letters.size();
    }
    return a.letters < b.letters;
  });
  return out;
}

std::vector<int> matching(const MorphismWord& word) {
  std::vector<int> partner(word.letters.size(), -1);
  std::vector<int> stack;
  for (int i = 0; i < static_cast<int>(word.letters.size()); ++i) {
    if (word.letters[i].dir == Dir::kUp) {
      stack.push_back(i);
    } else {
      if (stack.empty()) {
        throw std::invalid_argument("direction projection not Dyck");
      }
      int j = stack.back();
      stack.pop_back();
      partner[i] = j;
      partner[j] = i;
    }
  }
  if (!stack.empty()) {
    throw std::invalid_argument("direction projection not Dyck");
  }
  return partner;
}

bool strong_contains(const MorphismWord& big, const MorphismWord& small) {
  if (big.target_vertices != small.target_vertices) {
    throw std::invalid_argument("words over different alphabets");
  }
  if (small.letters.empty()) return true;
  if (small.letters.size() > big.letters.size()) return false;
  const std::vector<int> mb = matching(big);
  const std::vector<int> ms = matching(small);
  const int n = static_cast<int>(small.letters.size());
  const int m = static_cast<int>(big.letters.size());
  std::vector<int> phi(n, -1);
  // down-letters are forced to the partner of their pair's image, so the
  // search branches only on up-letters
  std::function<bool(int, int)> rec = [&](int i, int from) -> bool {
    if (i == n) return true;
    if (small.letters[i].dir == Dir::kDown) {
      int forced = mb[phi[ms[i]]];
      if (forced < from || big.letters[forced] != small.letters[i]) {
        return false;
      }
      phi[i] = forced;
      return rec(i + 1, forced + 1);
    }
    for (int j = from; j < m; ++j) {
      if (big.letters[j] == small.letters[i]) {
        phi[i] = j;
        if (rec(i + 1, j + 1)) return true;
      }
    }
    return false;
  };
  return rec(0, 0);
}

Sections sections(const MorphismWord& word, const PlanarTree& target) {
  const Pda pda = build_tree_pda(target);
  const std::vector<int> ids = to_pda_word(pda, word);
  const std::vector<Run> runs = accepting_runs(pda, ids);
  if (runs.empty()) {
    throw std::invalid_argument("word rejected by the tree automaton");
  }
  Sections result;
  result.state_of_position.resize(word.letters.size());
  Config cfg = initial_config(pda);
  for (int rule_idx : runs.front().rules) {
    const Pda::Rule& rule = pda.rules()[rule_idx];
    if (rule.input >= 0) {
      result.state_of_position[cfg.consumed] = pda.states()[rule.from];
    }
    cfg = apply_rule(pda, ids, cfg, rule_idx);
  }
  return result;
}

}  // namespace treelang
