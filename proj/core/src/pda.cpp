#include "treelang/pda.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "treelang/morphism.hpp"

namespace treelang {

namespace {

std::uint64_t make_key(int from, int input, int top) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 40) ^
         (static_cast<std::uint64_t>(static_cast<std::uint32_t>(input + 1))
          << 20) ^
         static_cast<std::uint64_t>(static_cast<std::uint32_t>(top + 1));
}

const std::vector<int> kNoRules;

}  // namespace

Pda::Pda(std::vector<std::string> states, std::vector<std::string> alphabet,
         std::vector<std::string> stack_symbols, std::vector<Rule> rules,
         int initial_state, int initial_stack_symbol,
         std::vector<int> final_states)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      stack_symbols_(std::move(stack_symbols)),
      rules_(std::move(rules)),
      initial_state_(initial_state),
      initial_stack_symbol_(initial_stack_symbol),
      final_states_(std::move(final_states)) {
  auto check_state = [&](int s) {
    if (s < 0 || s >= static_cast<int>(states_.size())) {
      throw std::invalid_argument("undeclared state referenced");
    }
  };
  auto check_symbol = [&](int a) {
    if (a < 0 || a >= static_cast<int>(stack_symbols_.size())) {
      throw std::invalid_argument("undeclared stack symbol referenced");
    }
  };
  check_state(initial_state_);
  check_symbol(initial_stack_symbol_);
  final_mask_.assign(states_.size(), 0);
  for (int f : final_states_) {
    check_state(f);
    final_mask_[f] = 1;
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    const Rule& r = rules_[i];
    check_state(r.from);
    check_state(r.to);
    if (r.input != kEps &&
        (r.input < 0 || r.input >= static_cast<int>(alphabet_.size()))) {
      throw std::invalid_argument("undeclared input letter referenced");
    }
    if (r.top != kEps) check_symbol(r.top);
    for (int p : r.push) check_symbol(p);
    index_[make_key(r.from, r.input, r.top)].push_back(static_cast<int>(i));
  }
}

bool Pda::is_final(int state) const { return final_mask_[state] != 0; }

int Pda::state_index(std::string_view name) const {
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (states_[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown state: " + std::string(name));
}

int Pda::letter_index(std::string_view name) const {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    if (alphabet_[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown letter: " + std::string(name));
}

const std::vector<int>& Pda::rules_for(int from, int input, int top) const {
  auto it = index_.find(make_key(from, input, top));
  return it == index_.end() ? kNoRules : it->second;
}

Config initial_config(const Pda& pda) {
  return {pda.initial_state(), 0, {pda.initial_stack_symbol()}};
}

namespace {

// Rule indices applicable at cfg, in declaration order.
void applicable_rules(const Pda& pda, const std::vector<int>& word,
                      const Config& cfg, std::vector<int>& out) {
  out.clear();
  const int letter =
      cfg.consumed < word.size() ? word[cfg.consumed] : Pda::kEps;
  const int top = cfg.stack.empty() ? Pda::kEps : cfg.stack.front();
  auto add = [&](int input, int t) {
    for (int r : pda.rules_for(cfg.state, input, t)) out.push_back(r);
  };
  if (letter != Pda::kEps) {
    if (top != Pda::kEps) add(letter, top);
    add(letter, Pda::kEps);
  }
  if (top != Pda::kEps) add(Pda::kEps, top);
  add(Pda::kEps, Pda::kEps);
  std::sort(out.begin(), out.end());
}

}  // namespace

Config apply_rule(const Pda& pda, const std::vector<int>& word,
                  const Config& cfg, int rule_index) {
  const Pda::Rule& r = pda.rules()[rule_index];
  if (r.from != cfg.state) throw std::logic_error("rule does not apply");
  Config next;
  next.state = r.to;
  next.consumed = cfg.consumed;
  if (r.input != Pda::kEps) {
    if (cfg.consumed >= word.size() || word[cfg.consumed] != r.input) {
      throw std::logic_error("rule does not apply");
    }
    ++next.consumed;
  }
  std::size_t keep_from = 0;
  if (r.top != Pda::kEps) {
    if (cfg.stack.empty() || cfg.stack.front() != r.top) {
      throw std::logic_error("rule does not apply");
    }
    keep_from = 1;
  }
  next.stack.reserve(r.push.size() + cfg.stack.size() - keep_from);
  next.stack.insert(next.stack.end(), r.push.begin(), r.push.end());
  next.stack.insert(next.stack.end(), cfg.stack.begin() + keep_from,
                    cfg.stack.end());
  return next;
}

std::vector<Move> step(const Pda& pda, const std::vector<int>& word,
                       const Config& cfg) {
  std::vector<int> rules;
  applicable_rules(pda, word, cfg, rules);
  std::vector<Move> moves;
  moves.reserve(rules.size());
  for (int r : rules) moves.push_back({r, apply_rule(pda, word, cfg, r)});
  return moves;
}

namespace {

struct RunSearch {
  const Pda& pda;
  const std::vector<int>& word;
  const SearchLimits& limits;
  std::size_t stack_cap;
  std::size_t visits = 0;
  std::vector<Run> found;
  std::vector<int> path;
  std::vector<int> scratch_rules;

  RunSearch(const Pda& p, const std::vector<int>& w, const SearchLimits& l)
      : pda(p), word(w), limits(l) {
    stack_cap = word.size() + 8 * (pda.states().size() + 2);
  }

  void dfs(const Config& cfg, std::set<Config>& eps_chain) {
    if (++visits > limits.max_visits) {
      throw SearchBudgetError("run search budget exceeded (epsilon-cycle?)");
    }
    if (cfg.consumed == word.size() && pda.is_final(cfg.state)) {
      found.push_back({path});
    }
    std::vector<int> rules;
    applicable_rules(pda, word, cfg, rules);
    for (int r : rules) {
      Config next = apply_rule(pda, word, cfg, r);
      if (next.stack.size() > stack_cap) {
        throw SearchBudgetError("stack growth exceeded cap (epsilon-cycle?)");
      }
      path.push_back(r);
      if (pda.rules()[r].input == Pda::kEps) {
        if (eps_chain.insert(next).second) {
          dfs(next, eps_chain);
          eps_chain.erase(next);
        }
        // a repeat within the epsilon chain is silently cut
      } else {
        std::set<Config> fresh{next};
        dfs(next, fresh);
      }
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<Run> accepting_runs(const Pda& pda, const std::vector<int>& word,
                                const SearchLimits& limits) {
  RunSearch search(pda, word, limits);
  Config start = initial_config(pda);
  std::set<Config> chain{start};
  search.dfs(start, chain);
  return search.found;
}

namespace {

using ConfigSet = std::set<std::pair<int, std::vector<int>>>;

// Closes a configuration set under epsilon-moves; bounded by limits.
void eps_close(const Pda& pda, ConfigSet& cfgs, const SearchLimits& limits,
               std::size_t stack_cap) {
  std::vector<std::pair<int, std::vector<int>>> frontier(cfgs.begin(),
                                                         cfgs.end());
  while (!frontier.empty()) {
    auto [state, stack] = frontier.back();
    frontier.pop_back();
    const int top = stack.empty() ? Pda::kEps : stack.front();
    auto expand = [&](int t) {
      for (int ri : pda.rules_for(state, Pda::kEps, t)) {
        const Pda::Rule& r = pda.rules()[ri];
        std::vector<int> ns(r.push);
        ns.insert(ns.end(), stack.begin() + (t == Pda::kEps ? 0 : 1),
                  stack.end());
        if (ns.size() > stack_cap) {
          throw SearchBudgetError("stack growth exceeded cap");
        }
        auto [it, fresh] = cfgs.emplace(r.to, std::move(ns));
        if (fresh) frontier.push_back(*it);
        if (cfgs.size() > limits.max_configs) {
          throw SearchBudgetError("configuration budget exceeded");
        }
      }
    };
    if (top != Pda::kEps) expand(top);
    expand(Pda::kEps);
  }
}

}  // namespace

bool accepts(const Pda& pda, const std::vector<int>& word,
             const SearchLimits& limits) {
  const std::size_t stack_cap = word.size() + 8 * (pda.states().size() + 2);
  ConfigSet cfgs{{pda.initial_state(), {pda.initial_stack_symbol()}}};
  eps_close(pda, cfgs, limits, stack_cap);
  for (int a : word) {
    ConfigSet next;
    for (const auto& [state, stack] : cfgs) {
      const int top = stack.empty() ? Pda::kEps : stack.front();
      auto expand = [&](int t) {
        for (int ri : pda.rules_for(state, a, t)) {
          const Pda::Rule& r = pda.rules()[ri];
          std::vector<int> ns(r.push);
          ns.insert(ns.end(), stack.begin() + (t == Pda::kEps ? 0 : 1),
                    stack.end());
          next.emplace(r.to, std::move(ns));
        }
      };
      if (top != Pda::kEps) expand(top);
      expand(Pda::kEps);
    }
    cfgs.swap(next);
    if (cfgs.empty()) return false;
    eps_close(pda, cfgs, limits, stack_cap);
  }
  for (const auto& [state, stack] : cfgs) {
    if (pda.is_final(state)) return true;
  }
  return false;
}

std::vector<std::vector<int>> enumerate_language(const Pda& pda, int max_len,
                                                 const SearchLimits& limits) {
  std::vector<std::vector<int>> out;
  const std::size_t stack_cap =
      static_cast<std::size_t>(max_len) + 8 * (pda.states().size() + 2);
  std::vector<int> word;
  const int n_letters = static_cast<int>(pda.alphabet().size());
  std::function<void(const ConfigSet&)> rec = [&](const ConfigSet& cfgs) {
    for (const auto& [state, stack] : cfgs) {
      if (pda.is_final(state)) {
        out.push_back(word);
        break;
      }
    }
    if (static_cast<int>(word.size()) == max_len) return;
    for (int a = 0; a < n_letters; ++a) {
      ConfigSet next;
      for (const auto& [state, stack] : cfgs) {
        const int top = stack.empty() ? Pda::kEps : stack.front();
        auto expand = [&](int t) {
          for (int ri : pda.rules_for(state, a, t)) {
            const Pda::Rule& r = pda.rules()[ri];
            std::vector<int> ns(r.push);
            ns.insert(ns.end(), stack.begin() + (t == Pda::kEps ? 0 : 1),
                      stack.end());
            next.emplace(r.to, std::move(ns));
          }
        };
        if (top != Pda::kEps) expand(top);
        expand(Pda::kEps);
      }
      if (next.empty()) continue;
      eps_close(pda, next, limits, stack_cap);
      word.push_back(a);
      rec(next);
      word.pop_back();
    }
  };
  ConfigSet start{{pda.initial_state(), {pda.initial_stack_symbol()}}};
  eps_close(pda, start, limits, stack_cap);
  rec(start);
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return out;
}

bool is_unambiguous_upto(const Pda& pda, int max_len,
                         const SearchLimits& limits) {
  for (const std::vector<int>& word : enumerate_language(pda, max_len, limits)) {
    if (accepting_runs(pda, word, limits).size() != 1) return false;
  }
  return true;
}

std::vector<Config> replay(const Pda& pda, const std::vector<int>& word,
                           const Run& run) {
  std::vector<Config> trace{initial_config(pda)};
  for (int r : run.rules) {
    trace.push_back(apply_rule(pda, word, trace.back(), r));
  }
  return trace;
}

std::string render_word(const Pda& pda, const std::vector<int>& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += pda.alphabet()[word[i]];
  }
  return out;
}

std::string format_config(const Pda& pda, const std::vector<int>& word,
                          const Config& cfg) {
  std::string rest;
  for (std::size_t i = cfg.consumed; i < word.size(); ++i) {
    if (!rest.empty()) rest += ' ';
    rest += pda.alphabet()[word[i]];
  }
  if (rest.empty()) rest = "eps";
  std::string stack;
  for (std::size_t i = 0; i < cfg.stack.size(); ++i) {
    if (i) stack += ' ';
    stack += pda.stack_symbols()[cfg.stack[i]];
  }
  if (stack.empty()) stack = "eps";
  return "(" + pda.states()[cfg.state] + ", " + rest + ", " + stack + ")";
}

std::string to_text(const Pda& pda) {
  std::ostringstream out;
  auto join = [](const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) s += ' ';
      s += parts[i];
    }
    return s;
  };
  out << "states: " << join(pda.states()) << '\n';
  out << "alphabet: " << join(pda.alphabet()) << '\n';
  out << "stack: " << join(pda.stack_symbols()) << '\n';
  out << "initial: " << pda.states()[pda.initial_state()] << '\n';
  out << "initial_stack: " << pda.stack_symbols()[pda.initial_stack_symbol()]
      << '\n';
  std::vector<std::string> finals;
  for (int f : pda.final_states()) finals.push_back(pda.states()[f]);
  out << "final: " << join(finals) << '\n';
  out << "transitions:\n";
  for (const Pda::Rule& r : pda.rules()) {
    out << pda.states()[r.from] << ", "
        << (r.input == Pda::kEps ? "eps" : pda.alphabet()[r.input]) << ", "
        << (r.top == Pda::kEps ? "eps" : pda.stack_symbols()[r.top]) << " -> "
        << pda.states()[r.to] << ", ";
    if (r.push.empty()) {
      out << "eps";
    } else {
      for (std::size_t i = 0; i < r.push.size(); ++i) {
        if (i) out << ' ';
        out << pda.stack_symbols()[r.push[i]];
      }
    }
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::stringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

int lookup(const std::vector<std::string>& names, const std::string& name,
           const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument(std::string("unknown ") + what + ": " + name);
}

std::string trim(std::string s) {
  auto issp = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  while (!s.empty() && issp(s.front())) s.erase(s.begin());
  while (!s.empty() && issp(s.back())) s.pop_back();
  return s;
}

}  // namespace

Pda pda_from_text(std::string_view text) {
  std::vector<std::string> states, alphabet, stack_symbols, final_names;
  std::string initial, initial_stack;
  std::vector<Pda::Rule> rules;
  bool in_transitions = false;
  std::stringstream ss{std::string(text)};
  std::string line;
  while (std::getline(ss, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!in_transitions) {
      auto colon = line.find(':');
      if (colon == std::string::npos) {
        throw std::invalid_argument("expected 'key: value' line: " + line);
      }
      std::string key = trim(line.substr(0, colon));
      std::string value = trim(line.substr(colon + 1));
      if (key == "states") {
        states = split_ws(value);
      } else if (key == "alphabet") {
        alphabet = split_ws(value);
      } else if (key == "stack") {
        stack_symbols = split_ws(value);
      } else if (key == "initial") {
        initial = value;
      } else if (key == "initial_stack") {
        initial_stack = value;
      } else if (key == "final") {
        final_names = split_ws(value);
      } else if (key == "transitions") {
        in_transitions = true;
      } else {
        throw std::invalid_argument("unknown header key: " + key);
      }
      continue;
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("transition row missing '->': " + line);
    }
    std::string lhs = line.substr(0, arrow);
    std::string rhs = line.substr(arrow + 2);
    std::vector<std::string> lparts;
    {
      std::stringstream ls(lhs);
      std::string part;
      while (std::getline(ls, part, ',')) lparts.push_back(trim(part));
    }
    if (lparts.size() != 3) {
      throw std::invalid_argument("transition row needs 3 left fields: " +
                                  line);
    }
    auto comma = rhs.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("transition row needs 2 right fields: " +
                                  line);
    }
    std::string to_name = trim(rhs.substr(0, comma));
    std::string push_str = trim(rhs.substr(comma + 1));
    Pda::Rule rule;
    rule.from = lookup(states, lparts[0], "state");
    rule.input = lparts[1] == "eps" ? Pda::kEps
                                    : lookup(alphabet, lparts[1], "letter");
    rule.top = lparts[2] == "eps"
                   ? Pda::kEps
                   : lookup(stack_symbols, lparts[2], "stack symbol");
    rule.to = lookup(states, to_name, "state");
    if (push_str != "eps") {
      for (const std::string& sym : split_ws(push_str)) {
        rule.push.push_back(lookup(stack_symbols, sym, "stack symbol"));
      }
    }
    rules.push_back(std::move(rule));
  }
  std::vector<int> finals;
  for (const std::string& f : final_names) {
    finals.push_back(lookup(states, f, "state"));
  }
  return Pda(states, alphabet, stack_symbols, std::move(rules),
             lookup(states, initial, "state"),
             lookup(stack_symbols, initial_stack, "stack symbol"),
             std::move(finals));
}

std::string to_dot(const Pda& pda) {
  std::ostringstream out;
  out << "digraph pda {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < pda.states().size(); ++i) {
    out << "  \"" << pda.states()[i] << "\"";
    if (pda.is_final(static_cast<int>(i))) out << " [shape=doublecircle]";
    out << ";\n";
  }
  out << "  start [shape=point];\n  start -> \""
      << pda.states()[pda.initial_state()] << "\";\n";
  for (const Pda::Rule& r : pda.rules()) {
    out << "  \"" << pda.states()[r.from] << "\" -> \"" << pda.states()[r.to]
        << "\" [label=\""
        << (r.input == Pda::kEps ? "eps" : pda.alphabet()[r.input]) << ", "
        << (r.top == Pda::kEps ? "eps" : pda.stack_symbols()[r.top]) << " / ";
    if (r.push.empty()) {
      out << "eps";
    } else {
      for (std::size_t i = 0; i < r.push.size(); ++i) {
        if (i) out << ' ';
        out << pda.stack_symbols()[r.push[i]];
      }
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<int> to_pda_word(const Pda& pda, const MorphismWord& word) {
  std::vector<int> ids;
  ids.reserve(word.letters.size());
  for (const Letter& l : word.letters) {
    std::string name;
    name += static_cast<char>(l.dir);
    name += std::to_string(l.label);
    ids.push_back(pda.letter_index(name));
  }
  return ids;
}

MorphismWord from_pda_word(const Pda& pda, const std::vector<int>& word,
                           int target_vertices) {
  std::string text;
  for (int id : word) {
    text += pda.alphabet()[id];
    text += ' ';
  }
  return parse_morphism_word(text, target_vertices);
}

}  // namespace treelang
