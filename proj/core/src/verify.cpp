#include "treelang/verify.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "treelang/algebraic.hpp"
#include "treelang/cone.hpp"
#include "treelang/contraction.hpp"
#include "treelang/dyck.hpp"
#include "treelang/morphism.hpp"
#include "treelang/pda.hpp"
#include "treelang/pda_builders.hpp"
#include "treelang/series.hpp"
#include "treelang/tree.hpp"

namespace treelang::verify {

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& why) {
    if (!cond) {
      pass = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << why;
    }
  }
};

std::vector<PlanarTree> trees_with_edges(int n) {
  std::vector<PlanarTree> out;
  visit_dyck(n, [&](const DyckWord& w) { out.push_back(dyck_to_planar_tree(w)); });
  return out;
}

// ---- criterion bodies ----

void catalan_counts(Check& c) {
  for (int n = 0; n <= 12; ++n) {
    std::int64_t count = 0;
    visit_dyck(n, [&](const DyckWord&) { ++count; });
    c.require(BigInt(count) == catalan(n),
              "word count != catalan(" + std::to_string(n) + ")");
  }
  c.require(catalan(12) == 208012, "catalan(12) != 208012");
  c.detail << "counts match for n <= 12 (c_12 = 208012)";
}

void bijection_roundtrips(Check& c) {
  std::int64_t words = 0;
  for (int n = 0; n <= 8; ++n) {
    visit_dyck(n, [&](const DyckWord& w) {
      ++words;
      const PlanarTree t = dyck_to_planar_tree(w);
      if (planar_tree_to_dyck(t) != w) {
        c.require(false, "word roundtrip failed at " + w);
      }
      if (!(dyck_to_planar_tree(planar_tree_to_dyck(t)) == t)) {
        c.require(false, "tree roundtrip failed at " + w);
      }
    });
  }
  c.detail << "both compositions are identities on " << words << " words";
}

void catalan_pda_language(Check& c) {
  const Pda pda = build_catalan_pda();
  const auto language = enumerate_language(pda, 16);
  std::set<std::string> got;
  for (const auto& word : language) {
    std::string s;
    for (int a : word) s += pda.alphabet()[a];
    got.insert(s);
  }
  std::set<std::string> expected;
  for (int n = 0; n <= 8; ++n) {
    visit_dyck(n, [&](const DyckWord& w) { expected.insert(w); });
  }
  c.require(got == expected, "language(16) differs from Dyck words");
  for (const auto& word : language) {
    if (accepting_runs(pda, word).size() != 1) {
      c.require(false, "ambiguous word " + render_word(pda, word));
      break;
    }
  }
  c.detail << got.size() << " words, all with a unique accepting run";
}

// Shared by criteria 4 and 6.
struct TreeLawData {
  std::vector<PlanarTree> targets;
  std::vector<std::vector<Contraction>> contractions;  // per target
};

TreeLawData tree_law_data() {
  TreeLawData data;
  for (int n = 0; n <= 3; ++n) {
    for (PlanarTree& t : trees_with_edges(n)) data.targets.push_back(std::move(t));
  }
  data.contractions.resize(data.targets.size());
  for (std::size_t i = 0; i < data.targets.size(); ++i) {
    for (int m = 0; m <= 5; ++m) {
      for (const PlanarTree& src : trees_with_edges(m)) {
        for (Contraction& ctr :
             enumerate_planar_contractions(src, data.targets[i])) {
          data.contractions[i].push_back(std::move(ctr));
        }
      }
    }
  }
  return data;
}

void tree_pda_language_law(Check& c) {
  const TreeLawData data = tree_law_data();
  c.require(data.targets.size() == 9, "expected 9 targets with <= 3 edges");
  std::size_t total = 0;
  for (std::size_t i = 0; i < data.targets.size(); ++i) {
    const PlanarTree& target = data.targets[i];
    const Pda pda = build_tree_pda(target);
    std::set<MorphismWord> expected;
    for (const Contraction& ctr : data.contractions[i]) {
      MorphismWord w = encode(ctr);
      if (w.size() <= 10) expected.insert(std::move(w));
    }
    std::set<MorphismWord> got;
    for (const auto& word : enumerate_language(pda, 10)) {
      got.insert(from_pda_word(pda, word, target.n_vertices()));
    }
    total += got.size();
    if (got != expected) {
      c.require(false, "language mismatch for target " +
                           planar_tree_to_dyck(target));
      continue;
    }
    if (!is_unambiguous_upto(pda, 10)) {
      c.require(false,
                "ambiguity for target " + planar_tree_to_dyck(target));
    }
  }
  c.detail << "9 targets, " << total
           << " accepted words equal the encoded contraction sets";
}

void worked_example(Check& c) {
  const PlanarTree source = dyck_to_planar_tree("uuuudduuuudduudddddd");
  const PlanarTree edge = dyck_to_planar_tree("ud");
  std::vector<int> vmap(11, 0);
  vmap[9] = vmap[10] = 1;
  const Contraction ctr{source, edge, vmap};
  c.require(is_planar_contraction(ctr), "Figure-1 map not planar");
  const MorphismWord w = encode(ctr);
  const MorphismWord expected = parse_morphism_word(
      "u0 u0 u0 u0 d0 d0 u0 u0 u0 u0 d0 d0 u1 u1 d1 d1 d0 d0 d0 d0", 2);
  c.require(w == expected, "encode differs from the printed word");
  const Pda pda = build_tree_pda(edge);
  const auto runs = accepting_runs(pda, to_pda_word(pda, w));
  c.require(runs.size() == 1, "expected exactly one accepting run");
  // section decomposition of the eight-letter example
  const MorphismWord w8 =
      parse_morphism_word("u0 u0 d0 u1 u1 d1 d1 d0", 2);
  const Sections secs = sections(w8, edge);
  const std::vector<std::string> want{"q0",    "q0",    "q0",    "q0",
                                      "q_e1u", "q_e1u", "q_e1u", "q_e1d"};
  c.require(secs.state_of_position == want, "section decomposition differs");
  c.detail << "word reproduced; unique run; sections = "
              "initial:4, (e,u):3, (e,d):1";
}

void norm_lemma(Check& c) {
  const TreeLawData data = tree_law_data();
  std::size_t checked = 0;
  for (const auto& group : data.contractions) {
    for (const Contraction& ctr : group) {
      ++checked;
      if (encode(ctr).size() != 2 * static_cast<std::size_t>(ctr.source.n_edges())) {
        c.require(false, "length law fails");
      }
    }
  }
  c.detail << "l(w) = 2 |E(source)| on " << checked << " contractions";
}

void pattern_pda_law(Check& c) {
  const PlanarTree edge = dyck_to_planar_tree("ud");
  const MorphismWord pattern = parse_morphism_word("u0 d0 u1 u1 d1 d1", 2);
  const Pda pda = build_pattern_pda(pattern, edge);
  std::set<MorphismWord> got;
  for (const auto& word : enumerate_language(pda, 12)) {
    got.insert(from_pda_word(pda, word, 2));
  }
  std::set<MorphismWord> expected;
  for (const MorphismWord& w : language_LT(edge, 6)) {
    if (w.size() <= 12 && strong_contains(w, pattern)) expected.insert(w);
  }
  c.require(got == expected, "pattern language differs from strong-contains filter");
  c.require(is_unambiguous_upto(pda, 12), "pattern automaton ambiguous");
  c.detail << got.size() << " words match the brute-force filter";
}

void s2_closed_form(Check& c) {
  const CoefficientSeries s = s_l_series(2, 10);
  c.require(s.coeffs[0] == 1, "coefficient at n=0 differs");
  for (int n = 1; n <= 10; ++n) {
    const BigInt expected = BigInt(n) * (n + 2) * (n + 1) / 2;
    c.require(s.coeffs[n] == expected,
              "coefficient at n=" + std::to_string(n) + " differs");
  }
  c.detail << "s_2 coefficients equal n*C(n+2,2) for n <= 10";
}

void star_norm_decomposition(Check& c) {
  const int order = 10;
  const CoefficientSeries combined = hilbert_dyck(dimension_statistic(), order);
  const CoefficientSeries edges = hilbert_dyck(edge_count_statistic(), order);
  const CoefficientSeries star = star_norm_series(order);
  c.require(combined == add(edges, star),
            "dimension series != edges + star-norm");
  // edge series = t * dC/dt of the Catalan series
  const CoefficientSeries cat = catalan_series(order);
  CoefficientSeries t_dcat;
  t_dcat.coeffs.assign(order + 1, 0);
  for (int n = 1; n <= order; ++n) t_dcat.coeffs[n] = cat.coeffs[n] * n;
  c.require(edges == t_dcat, "edge series != t * d/dt catalan");
  c.detail << "b_n = n c_n + a_n holds to order " << order;
}

void catalan_certificate(Check& c) {
  c.require(catalan_closed_form_check(12), "closed form mismatch");
  const auto eq = guess_algebraic(catalan_series(12), 1, 2, 3);
  c.require(eq.has_value(), "no equation found");
  if (eq) {
    AlgebraicEquation want;
    want.deg_t = 1;
    want.deg_f = 2;
    want.coeffs = {BigInt(1), BigInt(-1), BigInt(0),
                   BigInt(0), BigInt(0),  BigInt(1)};
    c.require(equivalent(*eq, want), "equation differs from t F^2 - F + 1");
    c.detail << "closed form matches; recovered " << to_string(*eq);
  }
}

void flat_bijection(Check& c) {
  std::int64_t classes = 0;
  for (int n = 0; n <= 6; ++n) {
    std::set<TreeCanonicalForm> seen;
    visit_dyck(n, [&](const DyckWord& w) {
      const PlanarTree t = dyck_to_planar_tree(w);
      if (!seen.insert(canonical_unrooted(t)).second) return;
      ++classes;
      const ConeGraph g = cone(t);
      if (corank1_flat_count(g) != subtree_count(t)) {
        c.require(false, "corank-1 flats != subtrees at " + w);
      }
      if (rank1_flat_count(g) != 2 * t.n_edges() + 1) {
        c.require(false, "rank-1 flats != 2|E|+1 at " + w);
      }
      if (kl1_formula(t) < 0) c.require(false, "negative KL_1 at " + w);
    });
  }
  c.require(kl1_formula(dyck_to_planar_tree("ud")) == 0,
            "KL_1(single edge) != 0");
  c.detail << classes << " isomorphism classes with <= 6 edges verified";
}

void multiplicity_law(Check& c) {
  for (int n = 0; n <= 10; ++n) {
    const auto mult = p_multiplicity(n);
    BigInt total = 0;
    for (const auto& [code, count] : mult) total += count;
    c.require(total == catalan(n),
              "multiplicities at n=" + std::to_string(n) + " do not sum");
    if (n >= 1) {
      std::vector<int> parent(n + 1);
      parent[0] = PlanarTree::kRootSentinel;
      for (int v = 1; v <= n; ++v) parent[v] = v - 1;
      const auto path_code =
          canonical_unrooted(PlanarTree::from_parents(parent));
      auto it = mult.find(path_code);
      c.require(it != mult.end() && it->second == n,
                "path multiplicity at n=" + std::to_string(n) + " is not n");
    }
  }
  c.detail << "multiplicities sum to c_n and the path class has p_T = n";
}

void star_norm_certificate(Check& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const CoefficientSeries series = star_norm_series(16);
  const auto eq = guess_algebraic(series, 6, 4, 5);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  c.require(eq.has_value(), "no validated equation");
  c.require(secs < 60.0, "exceeded the 60 s budget");
  if (eq) c.detail << to_string(*eq);
}

struct Criterion {
  int id;
  const char* name;
  void (*body)(Check&);
};

const Criterion kCriteria[] = {
    {1, "catalan-counts", catalan_counts},
    {2, "bijection-roundtrips", bijection_roundtrips},
    {3, "catalan-pda", catalan_pda_language},
    {4, "tree-pda-language-law", tree_pda_language_law},
    {5, "worked-example", worked_example},
    {6, "norm-lemma", norm_lemma},
    {7, "pattern-pda", pattern_pda_law},
    {8, "s2-closed-form", s2_closed_form},
    {9, "star-norm-decomposition", star_norm_decomposition},
    {10, "catalan-certificate", catalan_certificate},
    {11, "flat-bijection", flat_bijection},
    {12, "multiplicity-law", multiplicity_law},
    {13, "star-norm-certificate", star_norm_certificate},
};

}  // namespace

CriterionResult run_criterion(int id) {
  for (const Criterion& crit : kCriteria) {
    if (crit.id != id) continue;
    CriterionResult result;
    result.id = id;
    result.name = crit.name;
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.pass = false;
      check.detail << "exception: " << e.what();
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    result.pass = check.pass;
    result.detail = check.detail.str();
    return result;
  }
  throw std::invalid_argument("no criterion " + std::to_string(id));
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13};
  if (suite == "paper-examples") return {3, 5, 7, 8, 10};
  if (suite == "oracles") return {1, 2, 4, 6, 9, 11, 12, 13};
  throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<CriterionResult> run_suite(const std::string& suite) {
  std::vector<CriterionResult> results;
  for (int id : suite_criteria(suite)) results.push_back(run_criterion(id));
  return results;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " "
      << r.name;
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", r.seconds);
  out << buf;
  if (!r.detail.empty()) out << ": " << r.detail;
  return out.str();
}

}  // namespace treelang::verify
