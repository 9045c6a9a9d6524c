#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace treelang {

struct MorphismWord;

/// A push-down automaton (Q, Sigma, Gamma, delta, q0, Z, F) with
/// epsilon-moves on either the input or the stack component.
///
/// Transition semantics, with kEps = -1 in the input/top slots:
///   - input = a:    the rule consumes one letter a; input = kEps consumes
///     nothing.
///   - top = A:      the rule requires A on top, pops it, and prepends the
///     push string; top = kEps pops nothing and just prepends.
/// Acceptance is by final state with arbitrary residual stack.
///
/// The automaton is immutable after construction; rule order is the
/// declaration order and every search below follows it, so results are
/// deterministic.
class Pda {
 public:
  static constexpr int kEps = -1;

  struct Rule {
    int from;
    int input;  // alphabet index or kEps
    int top;    // stack symbol index or kEps
    int to;
    std::vector<int> push;  // leftmost lands on top

    bool operator==(const Rule&) const = default;
  };

  Pda(std::vector<std::string> states, std::vector<std::string> alphabet,
      std::vector<std::string> stack_symbols, std::vector<Rule> rules,
      int initial_state, int initial_stack_symbol,
      std::vector<int> final_states);

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<std::string>& stack_symbols() const {
    return stack_symbols_;
  }
  const std::vector<Rule>& rules() const { return rules_; }
  int initial_state() const { return initial_state_; }
  int initial_stack_symbol() const { return initial_stack_symbol_; }
  const std::vector<int>& final_states() const { return final_states_; }
  bool is_final(int state) const;

  int state_index(std::string_view name) const;
  int letter_index(std::string_view name) const;

  /// Rule indices with this exact key (input/top may be kEps), in
  /// declaration order.
  const std::vector<int>& rules_for(int from, int input, int top) const;

 private:
  std::vector<std::string> states_, alphabet_, stack_symbols_;
  std::vector<Rule> rules_;
  int initial_state_, initial_stack_symbol_;
  std::vector<int> final_states_;
  std::vector<char> final_mask_;
  std::unordered_map<std::uint64_t, std::vector<int>> index_;
};

/// Instantaneous description (q, w, S): the state, how much of the input has
/// been consumed, and the stack with the top at the front.
struct Config {
  int state = 0;
  std::size_t consumed = 0;
  std::vector<int> stack;

  auto operator<=>(const Config&) const = default;
};

Config initial_config(const Pda& pda);

/// One move of the relation: the applied rule and the successor description.
struct Move {
  int rule;
  Config next;
};

/// All one-move successors of `cfg` on `word` (empty when stuck).
std::vector<Move> step(const Pda& pda, const std::vector<int>& word,
                       const Config& cfg);

Config apply_rule(const Pda& pda, const std::vector<int>& word,
                  const Config& cfg, int rule_index);

/// A run recorded as the rule sequence from the initial description.
struct Run {
  std::vector<int> rules;
};

/// Caps for run and language searches.  Exceeding them raises
/// SearchBudgetError, which distinguishes a diagnosable blow-up (suspected
/// epsilon-cycle or runaway stack) from ordinary rejection.
struct SearchLimits {
  std::size_t max_visits = 50'000'000;
  std::size_t max_configs = 5'000'000;
};

class SearchBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff some run consumes the whole word and reaches a final state.
bool accepts(const Pda& pda, const std::vector<int>& word,
             const SearchLimits& limits = {});

/// Every accepting run, by depth-first search in rule order.  Configurations
/// may not repeat within a chain of consecutive epsilon-moves, and the stack
/// is capped at |word| plus a margin per state, so epsilon-cycles surface as
/// SearchBudgetError instead of hanging.
std::vector<Run> accepting_runs(const Pda& pda, const std::vector<int>& word,
                                const SearchLimits& limits = {});

/// All accepted words of length <= max_len as alphabet-index sequences,
/// sorted by length then lexicographically by index.
std::vector<std::vector<int>> enumerate_language(
    const Pda& pda, int max_len, const SearchLimits& limits = {});

/// True iff every accepted word of length <= max_len has exactly one
/// accepting run.
bool is_unambiguous_upto(const Pda& pda, int max_len,
                         const SearchLimits& limits = {});

/// Replays a run; returns every intermediate description including start
/// and end.  Throws if some rule does not apply.
std::vector<Config> replay(const Pda& pda, const std::vector<int>& word,
                           const Run& run);

/// Renders the instantaneous description as the triple (q, w, S).
std::string format_config(const Pda& pda, const std::vector<int>& word,
                          const Config& cfg);

std::string render_word(const Pda& pda, const std::vector<int>& word);

/// Structured text form listing the seven components, one transition per
/// row "state, input|eps, top|eps -> state, push-string".
std::string to_text(const Pda& pda);
Pda pda_from_text(std::string_view text);

/// Graphviz rendering.
std::string to_dot(const Pda& pda);

/// Conversions between morphism words and PDA input over the subscripted
/// alphabet (letter names "u<k>"/"d<k>").
std::vector<int> to_pda_word(const Pda& pda, const MorphismWord& word);
MorphismWord from_pda_word(const Pda& pda, const std::vector<int>& word,
                           int target_vertices);

}  // namespace treelang
