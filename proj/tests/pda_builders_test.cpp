#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "treelang/dyck.hpp"
#include "treelang/morphism.hpp"
#include "treelang/pda.hpp"
#include "treelang/pda_builders.hpp"

using namespace treelang;

namespace {

std::set<MorphismWord> language_as_words(const Pda& pda, int max_len,
                                         int target_vertices) {
  std::set<MorphismWord> out;
  for (const auto& w : enumerate_language(pda, max_len)) {
    out.insert(from_pda_word(pda, w, target_vertices));
  }
  return out;
}

std::set<MorphismWord> encoded_words(const PlanarTree& target, int max_edges,
                                     int max_len) {
  std::set<MorphismWord> out;
  for (const MorphismWord& w : language_LT(target, max_edges)) {
    if (static_cast<int>(w.size()) <= max_len) out.insert(w);
  }
  return out;
}

}  // namespace

TEST_CASE("euler tour lists each edge once per phase, up first") {
  const EulerTour tour = euler_tour(dyck_to_planar_tree("uududd"));
  REQUIRE(tour.events.size() == 6);
  CHECK(tour.events[0].edge == 1);
  CHECK(tour.events[0].phase == EulerTour::Phase::kUp);
  CHECK(tour.events[1].edge == 2);
  CHECK(tour.events[2].edge == 2);
  CHECK(tour.events[2].phase == EulerTour::Phase::kDown);
  CHECK(tour.events[3].edge == 3);
  CHECK(tour.events[5].edge == 1);
}

TEST_CASE("catalan automaton recognizes Dyck words unambiguously") {
  const Pda pda = build_catalan_pda();
  std::set<std::string> got;
  for (const auto& w : enumerate_language(pda, 12)) {
    std::string s;
    for (int a : w) s += pda.alphabet()[a];
    got.insert(s);
  }
  std::set<std::string> expected;
  for (int n = 0; n <= 6; ++n) {
    visit_dyck(n, [&](const DyckWord& w) { expected.insert(w); });
  }
  CHECK(got == expected);
  CHECK(is_unambiguous_upto(pda, 12));
}

TEST_CASE("tree automaton of the point matches the catalan machine") {
  const Pda pda = build_tree_pda(PlanarTree::single_vertex());
  std::set<std::string> got;
  for (const auto& w : enumerate_language(pda, 12)) {
    std::string s;
    for (int a : w) s += pda.alphabet()[a][0];  // strip the 0 subscript
    got.insert(s);
  }
  std::set<std::string> expected;
  for (int n = 0; n <= 6; ++n) {
    visit_dyck(n, [&](const DyckWord& w) { expected.insert(w); });
  }
  CHECK(got == expected);
  CHECK(is_unambiguous_upto(pda, 12));
}

TEST_CASE("Y-tree automaton matches the golden table") {
  const Pda pda = build_tree_pda(dyck_to_planar_tree("uududd"));
  CHECK(pda.states().size() == 8);
  CHECK(pda.rules().size() == 23);
  const std::string text = to_text(pda);
  std::ifstream golden(std::string(TREELANG_TEST_DATA_DIR) +
                       "/ytree_pda.golden");
  REQUIRE_MESSAGE(golden.good(), "missing golden file");
  std::stringstream buf;
  buf << golden.rdbuf();
  CHECK(text == buf.str());
}

TEST_CASE("Y-tree automaton transition rows") {
  const Pda pda = build_tree_pda(dyck_to_planar_tree("uududd"));
  const std::string text = to_text(pda);
  // every row of the machine except the trailing-section pop at the root
  const char* rows[] = {
      "q0, u0, eps -> q0, A0",
      "q0, d0, A0 -> q0, eps",
      "q0, u1, eps -> q_e1u, A1",
      "q_e1u, u1, A1 -> q_e1u, A1 A1",
      "q_e1u, d1, A1 -> q_e1u, eps",
      "q_e1u, u2, A1 -> q_e2u, A2 A1",
      "q_e2u, u2, A2 -> q_e2u, A2 A2",
      "q_e2u, d2, A2 -> q_e2u, eps",
      "q_e2u, eps, A1 -> q_e2d, A1",
      "q_e2d, u1, A1 -> q_e2d, A1 A1",
      "q_e2d, d1, A1 -> q_e2d, eps",
      "q_e2d, u3, A1 -> q_e3u, A3 A1",
      "q_e3u, u3, A3 -> q_e3u, A3 A3",
      "q_e3u, d3, A3 -> q_e3u, eps",
      "q_e3u, eps, A1 -> q_e3d, A1",
      "q_e3d, u1, A1 -> q_e3d, A1 A1",
      "q_e3d, d1, A1 -> q_e3d, eps",
      "q_e3d, eps, A0 -> q_e1d, A0",
      "q_e3d, eps, Z -> q_e1d, Z",
      "q_e1d, u0, A0 -> q_e1d, A0 A0",
      "q_e1d, u0, Z -> q_e1d, A0 Z",
      "q_e1d, eps, Z -> qf, eps",
  };
  for (const char* row : rows) {
    CHECK_MESSAGE(text.find(row) != std::string::npos, row);
  }
  // the root pop, required so trailing root sections can close
  CHECK(text.find("q_e1d, d0, A0 -> q_e1d, eps") != std::string::npos);
}

TEST_CASE("edge automaton accepts the Figure-1 word and the identity word") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const Pda pda = build_tree_pda(edge);
  const MorphismWord fig1 = parse_morphism_word(
      "u0 u0 u0 u0 d0 d0 u0 u0 u0 u0 d0 d0 u1 u1 d1 d1 d0 d0 d0 d0", 2);
  CHECK(accepting_runs(pda, to_pda_word(pda, fig1)).size() == 1);
  const MorphismWord idw = parse_morphism_word("u1 d1", 2);
  CHECK(accepting_runs(pda, to_pda_word(pda, idw)).size() == 1);
  CHECK_FALSE(accepts(pda, to_pda_word(pda, parse_morphism_word("u0 d0", 2))));
}

TEST_CASE("language law for the edge at length 8") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const Pda pda = build_tree_pda(edge);
  CHECK(language_as_words(pda, 8, 2) == encoded_words(edge, 4, 8));
  CHECK(is_unambiguous_upto(pda, 8));
}

TEST_CASE("determinism witness: at most one applicable move on accepted runs") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const Pda pda = build_tree_pda(edge);
  for (const auto& word : enumerate_language(pda, 8)) {
    const auto runs = accepting_runs(pda, word);
    REQUIRE(runs.size() == 1);
    for (const Config& cfg : replay(pda, word, runs.front())) {
      // counting both letter and epsilon moves, at most one applies except
      // at the final-state branch point on Z, which only ends runs
      const auto moves = step(pda, word, cfg);
      CHECK(moves.size() <= 2);
      if (moves.size() == 2) {
        const bool one_is_final = pda.is_final(moves[0].next.state) ||
                                  pda.is_final(moves[1].next.state);
        CHECK(one_is_final);
      }
    }
  }
}

TEST_CASE("pattern automaton equals the brute-force filter") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const MorphismWord pattern = parse_morphism_word("u0 d0 u1 u1 d1 d1", 2);
  const Pda pda = build_pattern_pda(pattern, edge);
  std::set<MorphismWord> expected;
  for (const MorphismWord& w : encoded_words(edge, 5, 10)) {
    if (strong_contains(w, pattern)) expected.insert(w);
  }
  CHECK(language_as_words(pda, 10, 2) == expected);
  CHECK(is_unambiguous_upto(pda, 10));
}

TEST_CASE("pattern automaton for the minimal word accepts all of L_T") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const MorphismWord idw = parse_morphism_word("u1 d1", 2);
  const Pda pda = build_pattern_pda(idw, edge);
  CHECK(language_as_words(pda, 8, 2) == encoded_words(edge, 4, 8));
}

TEST_CASE("pattern automata across several targets and patterns") {
  for (const char* target_word : {"ud", "uudd"}) {
    const PlanarTree target = dyck_to_planar_tree(target_word);
    const auto all = encoded_words(target, 4, 8);
    for (const MorphismWord& pattern : language_LT(target, 3)) {
      const Pda pda = build_pattern_pda(pattern, target);
      std::set<MorphismWord> expected;
      for (const MorphismWord& w : all) {
        if (strong_contains(w, pattern)) expected.insert(w);
      }
      CHECK(language_as_words(pda, 8, target.n_vertices()) == expected);
      CHECK(is_unambiguous_upto(pda, 8));
    }
  }
}

TEST_CASE("ideal automaton: union, absorption, degenerate singleton") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const MorphismWord pa = parse_morphism_word("u0 d0 u1 d1", 2);
  const MorphismWord pb = parse_morphism_word("u1 u1 d1 d1", 2);
  REQUIRE_FALSE(strong_contains(pa, pb));
  REQUIRE_FALSE(strong_contains(pb, pa));
  const auto all = encoded_words(edge, 5, 10);
  SUBCASE("two incomparable patterns give the union") {
    const Pda pda = build_ideal_pda({pa, pb}, edge);
    std::set<MorphismWord> expected;
    for (const MorphismWord& w : all) {
      if (strong_contains(w, pa) || strong_contains(w, pb)) expected.insert(w);
    }
    CHECK(language_as_words(pda, 10, 2) == expected);
    CHECK(is_unambiguous_upto(pda, 10));
  }
  SUBCASE("a dominated pattern is absorbed") {
    const MorphismWord pq = parse_morphism_word("u0 u0 d0 d0 u1 d1", 2);
    REQUIRE(strong_contains(pq, pa));
    const Pda with = build_ideal_pda({pa, pq}, edge);
    const Pda solo = build_pattern_pda(pa, edge);
    CHECK(language_as_words(with, 10, 2) == language_as_words(solo, 10, 2));
  }
  SUBCASE("singleton list equals the pattern automaton") {
    const Pda ideal = build_ideal_pda({pa}, edge);
    const Pda solo = build_pattern_pda(pa, edge);
    CHECK(language_as_words(ideal, 10, 2) == language_as_words(solo, 10, 2));
  }
}

TEST_CASE("pattern law on the Y-tree target") {
  const PlanarTree y = dyck_to_planar_tree("uududd");
  const MorphismWord idw = parse_morphism_word("u1 u2 d2 u3 d3 d1", 4);
  const Pda pda = build_pattern_pda(idw, y);
  const auto all = encoded_words(y, 4, 8);
  std::set<MorphismWord> expected;
  for (const MorphismWord& w : all) {
    if (strong_contains(w, idw)) expected.insert(w);
  }
  CHECK(language_as_words(pda, 8, 4) == expected);
  // the minimal word of L_T is contained in every word of L_T
  CHECK(expected == all);
  CHECK(is_unambiguous_upto(pda, 8));
}

TEST_CASE("empty pattern and empty ideal") {
  SUBCASE("the empty word over the point accepts all of L_T") {
    const PlanarTree vertex = PlanarTree::single_vertex();
    const Pda pda = build_pattern_pda(MorphismWord{{}, 1}, vertex);
    CHECK(language_as_words(pda, 6, 1) == encoded_words(vertex, 3, 6));
  }
  SUBCASE("the empty word is not a morphism word over the edge") {
    CHECK_THROWS_AS(
        build_pattern_pda(MorphismWord{{}, 2}, dyck_to_planar_tree("ud")),
        std::invalid_argument);
  }
  SUBCASE("the union over no patterns is the empty language") {
    const Pda pda = build_ideal_pda({}, dyck_to_planar_tree("ud"));
    CHECK(enumerate_language(pda, 6).empty());
  }
}

TEST_CASE("patterns outside L_T are rejected") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  CHECK_THROWS_AS(
      build_pattern_pda(parse_morphism_word("u0 d0", 2), edge),
      std::invalid_argument);
  CHECK_THROWS_AS(
      build_pattern_pda(parse_morphism_word("u0 d0", 1), edge),
      std::invalid_argument);
}

TEST_CASE("norm law via the automaton: accepted words have even length") {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const Pda pda = build_tree_pda(edge);
  for (const auto& word : enumerate_language(pda, 9)) {
    CHECK(word.size() % 2 == 0);
    const MorphismWord w = from_pda_word(pda, word, 2);
    const Contraction c = decode(w, edge);
    CHECK(2 * c.source.n_edges() == static_cast<int>(word.size()));
  }
}
