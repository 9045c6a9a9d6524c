#include <doctest.h>

#include <set>

#include "treelang/dyck.hpp"
#include "treelang/pda.hpp"
#include "treelang/pda_builders.hpp"

using namespace treelang;

namespace {

std::vector<int> word_of(const Pda& pda, const std::string& letters) {
  std::vector<int> out;
  for (char c : letters) out.push_back(pda.letter_index(std::string(1, c)));
  return out;
}

// Two distinct runs accept "ab": duplicated middle state.
Pda ambiguous_fixture() {
  std::vector<Pda::Rule> rules{
      {0, 0, Pda::kEps, 1, {}},       // q0 -a-> qA
      {0, 0, Pda::kEps, 2, {}},       // q0 -a-> qB
      {1, 1, Pda::kEps, 3, {}},       // qA -b-> qf
      {2, 1, Pda::kEps, 3, {}},       // qB -b-> qf
  };
  return Pda({"q0", "qA", "qB", "qf"}, {"a", "b"}, {"Z"}, std::move(rules), 0,
             0, {3});
}

Pda empty_language_fixture() {
  return Pda({"q0", "qf"}, {"a"}, {"Z"}, {}, 0, 0, {1});
}

// An epsilon-loop that grows the stack forever.
Pda epsilon_cycle_fixture() {
  std::vector<Pda::Rule> rules{
      {0, Pda::kEps, Pda::kEps, 0, {0}},
  };
  return Pda({"q0"}, {"a"}, {"Z"}, std::move(rules), 0, 0, {0});
}

}  // namespace

TEST_CASE("step on the Catalan machine") {
  const Pda pda = build_catalan_pda();
  const std::vector<int> word = word_of(pda, "uudd");
  SUBCASE("(q0, uudd, Z) steps to (q0, udd, AZ) and the dead-end eps branch") {
    const auto moves = step(pda, word, initial_config(pda));
    REQUIRE(moves.size() == 2);
    CHECK(moves[0].next.state == pda.state_index("q0"));
    CHECK(moves[0].next.consumed == 1);
    CHECK(moves[0].next.stack == std::vector<int>{1, 0});
    // the eps-move to q1 also applies but strands the unread input
    CHECK(moves[1].next.state == pda.state_index("q1"));
    CHECK(moves[1].next.consumed == 0);
    CHECK(step(pda, word, moves[1].next).empty());
  }
  SUBCASE("(q0, eps, Z) steps to (q1, eps, eps)") {
    const std::vector<int> empty;
    const auto moves = step(pda, empty, initial_config(pda));
    REQUIRE(moves.size() == 1);
    CHECK(moves[0].next.state == pda.state_index("q1"));
    CHECK(moves[0].next.stack.empty());
  }
  SUBCASE("stuck configurations have no successors") {
    Config stuck{pda.state_index("q1"), 0, {}};
    CHECK(step(pda, word, stuck).empty());
  }
}

TEST_CASE("acceptance on the Catalan machine") {
  const Pda pda = build_catalan_pda();
  CHECK(accepts(pda, word_of(pda, "uudd")));
  CHECK(accepts(pda, {}));
  CHECK_FALSE(accepts(pda, word_of(pda, "uddu")));
  CHECK_FALSE(accepts(pda, word_of(pda, "uud")));
}

TEST_CASE("accepting runs") {
  const Pda pda = build_catalan_pda();
  CHECK(accepting_runs(pda, word_of(pda, "uudd")).size() == 1);
  CHECK(accepting_runs(pda, word_of(pda, "uddu")).empty());
  const Pda amb = ambiguous_fixture();
  CHECK(accepting_runs(amb, {0, 1}).size() == 2);
}

TEST_CASE("runs agree with acceptance") {
  const Pda pda = build_catalan_pda();
  std::vector<int> word;
  // all words over {u,d} of length <= 8
  std::function<void()> rec = [&]() {
    CHECK(accepts(pda, word) == !accepting_runs(pda, word).empty());
    if (word.size() == 8) return;
    for (int a = 0; a < 2; ++a) {
      word.push_back(a);
      rec();
      word.pop_back();
    }
  };
  rec();
}

TEST_CASE("language enumeration") {
  const Pda pda = build_catalan_pda();
  const auto language = enumerate_language(pda, 4);
  std::set<std::string> got;
  for (const auto& w : language) {
    std::string s;
    for (int a : w) s += pda.alphabet()[a];
    got.insert(s);
  }
  CHECK(got == std::set<std::string>{"", "ud", "uudd", "udud"});
  CHECK(enumerate_language(empty_language_fixture(), 4).empty());
}

TEST_CASE("bounded unambiguity") {
  CHECK(is_unambiguous_upto(build_catalan_pda(), 12));
  CHECK_FALSE(is_unambiguous_upto(ambiguous_fixture(), 2));
  CHECK(is_unambiguous_upto(empty_language_fixture(), 4));
}

TEST_CASE("epsilon cycles raise a budget error instead of hanging") {
  const Pda pda = epsilon_cycle_fixture();
  SearchLimits limits;
  limits.max_visits = 10'000;
  CHECK_THROWS_AS(accepting_runs(pda, {}, limits), SearchBudgetError);
}

TEST_CASE("replay reproduces runs and never mutates inputs") {
  const Pda pda = build_catalan_pda();
  const std::vector<int> word = word_of(pda, "uudd");
  const auto runs = accepting_runs(pda, word);
  REQUIRE(runs.size() == 1);
  const auto trace = replay(pda, word, runs.front());
  CHECK(trace.front() == initial_config(pda));
  CHECK(trace.back().consumed == word.size());
  CHECK(pda.is_final(trace.back().state));
  CHECK(format_config(pda, word, trace.front()) == "(q0, u u d d, Z)");
  CHECK(format_config(pda, word, trace.back()) == "(q1, eps, eps)");
}

TEST_CASE("text round trip") {
  for (const Pda& pda :
       {build_catalan_pda(), build_tree_pda(dyck_to_planar_tree("uududd"))}) {
    const std::string text = to_text(pda);
    const Pda back = pda_from_text(text);
    CHECK(to_text(back) == text);
    CHECK(back.states() == pda.states());
    CHECK(back.rules() == pda.rules());
  }
  CHECK_THROWS_AS(pda_from_text("states: q0\nnonsense"),
                  std::invalid_argument);
}

TEST_CASE("dot rendering mentions every state") {
  const Pda pda = build_catalan_pda();
  const std::string dot = to_dot(pda);
  CHECK(dot.find("\"q0\"") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
}
