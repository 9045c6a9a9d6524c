#include <doctest.h>

#include "treelang/dyck.hpp"

using namespace treelang;

namespace {

// Closed form C(2n,n)/(n+1), independent of the recurrence.
BigInt catalan_closed(int n) {
  BigInt binom = 1;
  for (int k = 1; k <= n; ++k) binom = binom * (n + k) / k;
  return binom / (n + 1);
}

}  // namespace

TEST_CASE("dyck validation") {
  CHECK(validate_dyck(""));
  CHECK(validate_dyck("uudd"));
  CHECK(validate_dyck("UuDd"));
  CHECK_FALSE(validate_dyck("duud"));
  CHECK_FALSE(validate_dyck("uu"));
  CHECK_FALSE(validate_dyck("uxd"));
  CHECK_THROWS_AS(parse_dyck("uddu"), std::invalid_argument);
}

TEST_CASE("dyck enumeration is lexicographic and Catalan-counted") {
  CHECK_THROWS_AS(enumerate_dyck(-1), std::invalid_argument);
  CHECK(enumerate_dyck(0) == std::vector<DyckWord>{""});
  CHECK(enumerate_dyck(2) == std::vector<DyckWord>{"uudd", "udud"});
  CHECK(enumerate_dyck(3).size() == 5);
  for (int n = 0; n <= 12; ++n) {
    std::int64_t count = 0;
    visit_dyck(n, [&](const DyckWord&) { ++count; });
    CHECK(BigInt(count) == catalan(n));
  }
}

TEST_CASE("catalan recurrence agrees with the closed form") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(12) == 208012);
  for (int n = 0; n <= 20; ++n) CHECK(catalan(n) == catalan_closed(n));
}

TEST_CASE("bijection with planar trees") {
  CHECK(dyck_to_planar_tree("") == PlanarTree::single_vertex());
  CHECK(dyck_to_planar_tree("ud") ==
        PlanarTree::from_parents({PlanarTree::kRootSentinel, 0}));
  CHECK(dyck_to_planar_tree("uududd") ==
        PlanarTree::from_parents({PlanarTree::kRootSentinel, 0, 1, 1}));
  CHECK(planar_tree_to_dyck(PlanarTree::single_vertex()) == "");
  // the Figure-1 tree of the worked example
  const DyckWord fig1 = "uuuudduuuudduudddddd";
  CHECK(planar_tree_to_dyck(dyck_to_planar_tree(fig1)) == fig1);
  CHECK_THROWS_AS(dyck_to_planar_tree("uddu"), std::invalid_argument);
}

TEST_CASE("roundtrips are identities up to 8 edges") {
  for (int n = 0; n <= 8; ++n) {
    visit_dyck(n, [&](const DyckWord& w) {
      const PlanarTree t = dyck_to_planar_tree(w);
      CHECK(planar_tree_to_dyck(t) == w);
      CHECK(static_cast<int>(w.size()) == 2 * t.n_edges());
    });
  }
}

TEST_CASE("p_multiplicity") {
  CHECK(p_multiplicity(0).size() == 1);
  const auto m1 = p_multiplicity(1);
  REQUIRE(m1.size() == 1);
  CHECK(m1.begin()->second == 1);
  const auto m2 = p_multiplicity(2);
  REQUIRE(m2.size() == 1);
  CHECK(m2.begin()->second == 2);
  const auto m3 = p_multiplicity(3);
  REQUIRE(m3.size() == 2);
  const auto path3 = canonical_unrooted(dyck_to_planar_tree("uuuddd"));
  const auto star3 = canonical_unrooted(dyck_to_planar_tree("ududud"));
  CHECK(m3.at(path3) == 3);
  CHECK(m3.at(star3) == 2);

  SUBCASE("values sum to catalan, path class has multiplicity n") {
    for (int n = 1; n <= 9; ++n) {
      const auto mult = p_multiplicity(n);
      BigInt total = 0;
      for (const auto& [code, count] : mult) total += count;
      CHECK(total == catalan(n));
      const DyckWord path_word = std::string(n, 'u') + std::string(n, 'd');
      CHECK(mult.at(canonical_unrooted(dyck_to_planar_tree(path_word))) == n);
    }
  }
}
