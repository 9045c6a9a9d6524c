#include <doctest.h>

#include <map>

#include "treelang/algebraic.hpp"
#include "treelang/cone.hpp"
#include "treelang/dyck.hpp"
#include "treelang/series.hpp"

using namespace treelang;

namespace {

CoefficientSeries from_ints(std::vector<long long> values) {
  CoefficientSeries s;
  for (long long v : values) s.coeffs.emplace_back(v);
  return s;
}

}  // namespace

TEST_CASE("trivial statistic gives the Catalan numbers") {
  CHECK(hilbert_dyck(trivial_statistic(), 6) ==
        from_ints({1, 1, 2, 5, 14, 42, 132}));
  CHECK(catalan_series(6) == from_ints({1, 1, 2, 5, 14, 42, 132}));
}

TEST_CASE("edge statistic gives n * c_n") {
  CHECK(hilbert_dyck(edge_count_statistic(), 8) ==
        from_ints({0, 1, 4, 15, 56, 210, 792, 3003, 11440}));
}

TEST_CASE("star-norm series") {
  // frozen from independent enumeration; a_2 = 2, a_3 = 3*2 + 2*3 = 12
  CHECK(star_norm_series(12) ==
        from_ints({0, 0, 2, 12, 56, 240, 990, 4004, 16016, 63648, 251940,
                   994840, 3922512}));
}

TEST_CASE("subtree series with and without the leaf cutoff") {
  CHECK(s_l_series(2, 8) == from_ints({1, 3, 12, 30, 60, 105, 168, 252, 360}));
  CHECK(s_l_series(3, 8) ==
        from_ints({1, 3, 12, 52, 196, 595, 1512, 3360, 6744}));
  CHECK(hilbert_dyck(subtree_statistic(std::nullopt), 8) ==
        from_ints({1, 3, 12, 52, 236, 1109, 5366, 26639, 135300}));
  // a large bound removes the cutoff
  CHECK(s_l_series(20, 8) ==
        hilbert_dyck(subtree_statistic(std::nullopt), 8));
  CHECK(s_l_series(20, 8).coeffs[1] == 3);
  CHECK_THROWS_AS(s_l_series(1, 4), std::invalid_argument);
}

TEST_CASE("kl module series") {
  const CoefficientSeries kl2 = kl_module_series(2, 8);
  CHECK(kl2 == from_ints({0, 0, 2, 9, 24, 50, 90, 147, 224}));
  CHECK(kl_module_series(3, 8) ==
        from_ints({0, 0, 2, 17, 88, 320, 914, 2205, 4704}));
  SUBCASE("coefficients nonnegative and vanishing at n = 1") {
    for (const BigInt& c : kl2.coeffs) CHECK(c >= 0);
    CHECK(kl2.coeffs[1] == 0);
  }
  SUBCASE("every summand equals the flat-count formula") {
    for (int n = 0; n <= 6; ++n) {
      BigInt total = 0;
      visit_dyck(n, [&](const DyckWord& w) {
        const PlanarTree t = dyck_to_planar_tree(w);
        if (leaf_count(t) <= 2) total += kl1_formula(t);
      });
      CHECK(total == kl2.coeffs[n]);
    }
  }
}

TEST_CASE("unrooted statistics factor through p_multiplicity") {
  for (const TreeStatistic& stat :
       {star_norm_statistic(), subtree_statistic(2), trivial_statistic()}) {
    REQUIRE(stat.dependence == Dependence::kUnrooted);
    const CoefficientSeries direct = hilbert_dyck(stat, 8);
    for (int n = 0; n <= 8; ++n) {
      // evaluate one representative per unrooted class, weighted by p_T
      std::map<TreeCanonicalForm, std::int64_t> reps;
      BigInt total = 0;
      visit_dyck(n, [&](const DyckWord& w) {
        const PlanarTree t = dyck_to_planar_tree(w);
        const auto code = canonical_unrooted(t);
        auto [it, fresh] = reps.try_emplace(code, stat.eval(t));
        if (!fresh) {
          // unrooted statistics must agree across the class
          CHECK(it->second == stat.eval(t));
        }
        total += it->second;
      });
      CHECK(total == direct.coeffs[n]);
    }
  }
}

TEST_CASE("catalan closed form and functional equation") {
  CHECK(catalan_closed_form_check(12));
  CHECK(catalan_closed_form_check(0));
  SUBCASE("C = 1 + t C^2 coefficientwise") {
    const CoefficientSeries cat = catalan_series(10);
    const CoefficientSeries c2 = multiply(cat, cat);
    CoefficientSeries rhs;
    rhs.coeffs.assign(11, 0);
    rhs.coeffs[0] = 1;
    for (int n = 1; n <= 10; ++n) rhs.coeffs[n] = c2.coeffs[n - 1];
    CHECK(cat == rhs);
  }
}

TEST_CASE("series arithmetic") {
  const CoefficientSeries cat = catalan_series(8);
  SUBCASE("derivative times t gives n * c_n") {
    const CoefficientSeries d = derivative(cat);
    CoefficientSeries t_d;
    t_d.coeffs.assign(9, 0);
    for (int n = 1; n <= 8; ++n) t_d.coeffs[n] = d.coeffs[n - 1];
    CHECK(t_d == hilbert_dyck(edge_count_statistic(), 8));
  }
  SUBCASE("adding zero is the identity") {
    CoefficientSeries zero;
    zero.coeffs.assign(9, 0);
    CHECK(add(cat, zero) == cat);
  }
  SUBCASE("variable scaling") {
    const CoefficientSeries scaled = scale_variable(cat, 2);
    for (int n = 0; n <= 8; ++n) {
      CHECK(scaled.coeffs[n] == cat.coeffs[n] * boost::multiprecision::pow(
                                                    BigInt(2), n));
    }
  }
  SUBCASE("mismatched truncations throw") {
    CHECK_THROWS_AS(add(catalan_series(4), catalan_series(5)),
                    std::invalid_argument);
    CHECK_THROWS_AS(multiply(catalan_series(4), catalan_series(5)),
                    std::invalid_argument);
  }
}

TEST_CASE("guess_algebraic recovers the Catalan equation") {
  const auto eq = guess_algebraic(catalan_series(12), 1, 2, 3);
  REQUIRE(eq.has_value());
  AlgebraicEquation want;
  want.deg_t = 1;
  want.deg_f = 2;
  want.coeffs = {BigInt(1), BigInt(-1), BigInt(0),
                 BigInt(0), BigInt(0),  BigInt(1)};
  CHECK(equivalent(*eq, want));
  CHECK(to_string(*eq) == "(1) + (-1)*F + (t)*F^2 = 0");
}

TEST_CASE("guess_algebraic rejects factorial growth") {
  CoefficientSeries fact;
  fact.coeffs.assign(13, 1);
  for (int n = 1; n <= 12; ++n) fact.coeffs[n] = fact.coeffs[n - 1] * n;
  CHECK_FALSE(guess_algebraic(fact, 2, 2, 3).has_value());
}

TEST_CASE("guess_algebraic needs enough coefficients") {
  CHECK_THROWS_AS(guess_algebraic(catalan_series(3), 3, 3, 4),
                  std::invalid_argument);
}

TEST_CASE("hilbert_dyck bounds its enumeration") {
  CHECK_THROWS_AS(hilbert_dyck(trivial_statistic(), -1),
                  std::invalid_argument);
  CHECK_THROWS_AS(hilbert_dyck(trivial_statistic(), 21),
                  std::invalid_argument);
}
