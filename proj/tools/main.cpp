// Command-line surface for the tree-contraction language toolkit: tree and
// morphism enumeration, automaton construction and simulation, and exact
// generating series, all with deterministic plain-text output.
//
// Exit codes: 0 success, 1 verification/acceptance failure, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "treelang/algebraic.hpp"
#include "treelang/cone.hpp"
#include "treelang/contraction.hpp"
#include "treelang/dyck.hpp"
#include "treelang/morphism.hpp"
#include "treelang/pda.hpp"
#include "treelang/pda_builders.hpp"
#include "treelang/series.hpp"
#include "treelang/tree.hpp"
#include "treelang/verify.hpp"

namespace {

using namespace treelang;

SearchLimits limits_from_env() {
  SearchLimits limits;
  if (const char* budget = std::getenv("TREELANG_ENUM_BUDGET")) {
    const std::size_t value = std::strtoull(budget, nullptr, 10);
    if (value > 0) {
      limits.max_visits = value;
      limits.max_configs = value;
    }
  }
  return limits;
}

std::vector<int> parse_vertex_map(const std::string& text) {
  std::vector<int> map;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) map.push_back(std::stoi(tok));
  return map;
}

std::vector<int> parse_pda_input(const Pda& pda, const std::string& text) {
  std::vector<std::string> tokens;
  {
    std::stringstream ss(text);
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
  }
  if (tokens.size() == 1) {
    // allow compact words like "uudd" when every character is a letter name
    bool all_single = true;
    for (char c : tokens[0]) {
      bool found = false;
      for (const auto& name : pda.alphabet()) found |= name == std::string(1, c);
      all_single &= found;
    }
    if (all_single && tokens[0].size() > 1) {
      std::vector<int> word;
      for (char c : tokens[0]) word.push_back(pda.letter_index(std::string(1, c)));
      return word;
    }
  }
  std::vector<int> word;
  for (const auto& tok : tokens) word.push_back(pda.letter_index(tok));
  return word;
}

Pda load_pda(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return pda_from_text(buf.str());
}

int run_enumerate(const std::string& kind, int edges,
                  const std::string& cls, const std::string& target_text,
                  int max_edges) {
  if (kind == "trees") {
    if (cls == "planar") {
      visit_dyck(edges, [](const DyckWord& w) {
        std::cout << w << " 1\n";
      });
    } else {
      // group words by canonical code, keyed to the first (lexicographically
      // least) representative word
      std::map<TreeCanonicalForm, std::pair<std::string, std::int64_t>> groups;
      visit_dyck(edges, [&](const DyckWord& w) {
        const PlanarTree t = dyck_to_planar_tree(w);
        const TreeCanonicalForm code =
            cls == "rooted" ? canonical_rooted(t) : canonical_unrooted(t);
        auto [it, fresh] = groups.try_emplace(code, w, 0);
        ++it->second.second;
        (void)fresh;
      });
      std::vector<std::pair<std::string, std::int64_t>> rows;
      for (auto& [code, row] : groups) rows.push_back(row);
      std::sort(rows.begin(), rows.end());
      for (const auto& [word, count] : rows) {
        std::cout << (word.empty() ? "-" : word) << " " << count << "\n";
      }
    }
    return 0;
  }
  // morphisms
  const PlanarTree target = parse_tree(target_text);
  for (const MorphismWord& w : language_LT(target, max_edges)) {
    std::cout << (w.letters.empty() ? "eps" : to_string(w)) << "\n";
  }
  return 0;
}

int run_encode(const std::string& source_text, const std::string& target_text,
               const std::string& map_text) {
  const PlanarTree source = parse_tree(source_text);
  const PlanarTree target = parse_tree(target_text);
  const std::vector<int> vmap = parse_vertex_map(map_text);
  if (static_cast<int>(vmap.size()) != source.n_vertices()) {
    std::cout << "error: map has " << vmap.size() << " entries, source has "
              << source.n_vertices() << " vertices\n";
    return 2;
  }
  if (auto why = planar_contraction_violation(vmap, source, target)) {
    std::cout << "not a planar contraction: " << *why << "\n";
    return 1;
  }
  std::cout << to_string(encode({source, target, vmap})) << "\n";
  return 0;
}

int run_decode(const std::string& target_text, const std::string& word_text) {
  const PlanarTree target = parse_tree(target_text);
  const MorphismWord word =
      parse_morphism_word(word_text, target.n_vertices());
  const Contraction c = decode(word, target);
  std::cout << "source: " << planar_tree_to_dyck(c.source) << "\n";
  std::cout << "source parents: " << format_parents(c.source) << "\n";
  std::string map_text;
  for (std::size_t i = 0; i < c.vertex_map.size(); ++i) {
    if (i) map_text += ',';
    map_text += std::to_string(c.vertex_map[i]);
  }
  std::cout << "map: " << map_text << "\n";
  if (auto why = planar_contraction_violation(c.vertex_map, c.source, c.target)) {
    std::cout << "planar contraction: no (" << *why << ")\n";
  } else {
    std::cout << "planar contraction: yes\n";
  }
  return 0;
}

int run_series(const std::string& stat_name, int leaf_bound, int order,
               const std::string& guess, int holdout,
               const std::string& format) {
  CoefficientSeries series;
  if (stat_name == "trivial") {
    series = hilbert_dyck(trivial_statistic(), order);
  } else if (stat_name == "starnorm") {
    series = star_norm_series(order);
  } else if (stat_name == "edges") {
    series = hilbert_dyck(edge_count_statistic(), order);
  } else if (stat_name == "subtrees") {
    series = leaf_bound > 0 ? s_l_series(leaf_bound, order)
                            : hilbert_dyck(subtree_statistic(std::nullopt), order);
  } else if (stat_name == "kl1") {
    series = kl_module_series(leaf_bound > 0 ? leaf_bound : 2, order);
  } else {
    std::cerr << "error: unknown statistic " << stat_name << "\n";
    return 2;
  }
  if (format == "csv") {
    std::cout << "n,coefficient\n";
    for (std::size_t n = 0; n < series.coeffs.size(); ++n) {
      std::cout << n << "," << series.coeffs[n].str() << "\n";
    }
  } else {
    std::cout << to_string(series) << "\n";
  }
  if (!guess.empty()) {
    const auto comma = guess.find(',');
    if (comma == std::string::npos) {
      std::cerr << "error: --guess expects dT,dF\n";
      return 2;
    }
    const int dt = std::stoi(guess.substr(0, comma));
    const int df = std::stoi(guess.substr(comma + 1));
    const auto eq = guess_algebraic(series, dt, df, holdout);
    if (!eq) {
      std::cout << "equation: none found\n";
      return 1;
    }
    std::cout << "equation: " << to_string(*eq) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tree-contraction languages: enumeration, automata, series"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list trees or morphism words");
  enumerate->require_subcommand(1);
  auto* en_trees = enumerate->add_subcommand("trees", "trees with a given edge count");
  int edges = 0;
  std::string tree_class = "planar";
  en_trees->add_option("--edges", edges, "edge count")->required();
  en_trees->add_option("--class", tree_class, "planar|rooted|unrooted")
      ->check(CLI::IsMember({"planar", "rooted", "unrooted"}));
  auto* en_morph = enumerate->add_subcommand("morphisms",
                                             "morphism words into a target tree");
  std::string en_target;
  int max_edges = 0;
  en_morph->add_option("--target", en_target, "target tree (word or parents)")
      ->required();
  en_morph->add_option("--max-edges", max_edges, "largest source edge count")
      ->required();

  // encode / decode
  auto* encode_cmd = app.add_subcommand("encode", "morphism word of a contraction");
  std::string src_text, tgt_text, map_text;
  encode_cmd->add_option("--source", src_text, "source tree")->required();
  encode_cmd->add_option("--target", tgt_text, "target tree")->required();
  encode_cmd->add_option("--map", map_text, "comma-separated vertex images")
      ->required();
  auto* decode_cmd = app.add_subcommand("decode", "contraction of a morphism word");
  std::string dec_target, dec_word;
  decode_cmd->add_option("--target", dec_target, "target tree")->required();
  decode_cmd->add_option("--word", dec_word, "morphism word")->required();

  // pda
  auto* pda_cmd = app.add_subcommand("pda", "automaton construction and runs");
  pda_cmd->require_subcommand(1);
  auto* pda_build = pda_cmd->add_subcommand("build", "build P_T or a pattern automaton");
  std::string build_tree, build_out;
  std::vector<std::string> build_patterns;
  pda_build->add_option("--tree", build_tree, "target tree")->required();
  pda_build->add_option("--pattern", build_patterns,
                        "pattern word(s); repeat for an ideal automaton");
  pda_build->add_option("--out", build_out, "output file (default stdout)");
  auto* pda_run = pda_cmd->add_subcommand("run", "run a word");
  std::string run_in, run_word;
  bool run_trace = false;
  pda_run->add_option("--in", run_in, "automaton file")->required();
  pda_run->add_option("--word", run_word, "input word")->required();
  pda_run->add_flag("--trace", run_trace, "print the accepting run");
  auto* pda_lang = pda_cmd->add_subcommand("lang", "enumerate the language");
  std::string lang_in;
  int lang_max = 0;
  pda_lang->add_option("--in", lang_in, "automaton file")->required();
  pda_lang->add_option("--max-len", lang_max, "length bound")->required();
  auto* pda_chk = pda_cmd->add_subcommand("check-unambiguous",
                                          "bounded unambiguity check");
  std::string chk_in;
  int chk_max = 0;
  pda_chk->add_option("--in", chk_in, "automaton file")->required();
  pda_chk->add_option("--max-len", chk_max, "length bound")->required();
  auto* pda_dot = pda_cmd->add_subcommand("dot", "Graphviz rendering");
  std::string dot_in, dot_out;
  pda_dot->add_option("--in", dot_in, "automaton file")->required();
  pda_dot->add_option("--out", dot_out, "output file (default stdout)");

  // series
  auto* series_cmd = app.add_subcommand("series", "Hilbert-Dyck series");
  std::string stat_name, guess, format = "list";
  int leaf_bound = 0, order = 0, holdout = 3;
  series_cmd->add_option("--stat", stat_name, "trivial|starnorm|edges|subtrees|kl1")
      ->required()
      ->check(CLI::IsMember({"trivial", "starnorm", "edges", "subtrees", "kl1"}));
  series_cmd->add_option("--leaf-bound", leaf_bound, "leaf cutoff l >= 2");
  series_cmd->add_option("--order", order, "truncation order")->required();
  series_cmd->add_option("--guess", guess, "degree bounds dT,dF for equation fitting");
  series_cmd->add_option("--holdout", holdout, "held-out coefficients (default 3)");
  series_cmd->add_option("--format", format, "list|csv")
      ->check(CLI::IsMember({"list", "csv"}));

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run acceptance criteria");
  std::string suite = "all";
  verify_cmd->add_option("--suite", suite, "all|paper-examples|oracles")
      ->check(CLI::IsMember({"all", "paper-examples", "oracles"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  const SearchLimits limits = limits_from_env();
  try {
    if (en_trees->parsed()) {
      return run_enumerate("trees", edges, tree_class, "", 0);
    }
    if (en_morph->parsed()) {
      return run_enumerate("morphisms", 0, "", en_target, max_edges);
    }
    if (encode_cmd->parsed()) {
      return run_encode(src_text, tgt_text, map_text);
    }
    if (decode_cmd->parsed()) {
      return run_decode(dec_target, dec_word);
    }
    if (pda_build->parsed()) {
      const PlanarTree tree = parse_tree(build_tree);
      Pda pda = [&] {
        if (build_patterns.empty()) return build_tree_pda(tree);
        std::vector<MorphismWord> patterns;
        for (const std::string& p : build_patterns) {
          patterns.push_back(parse_morphism_word(p, tree.n_vertices()));
        }
        return build_ideal_pda(patterns, tree);
      }();
      const std::string text = to_text(pda);
      if (build_out.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(build_out);
        out << text;
      }
      return 0;
    }
    if (pda_run->parsed()) {
      const Pda pda = load_pda(run_in);
      const std::vector<int> word = parse_pda_input(pda, run_word);
      const auto runs = accepting_runs(pda, word, limits);
      if (runs.empty()) {
        std::cout << "rejected\n";
        return 1;
      }
      std::cout << "accepted (" << runs.size() << " run"
                << (runs.size() == 1 ? "" : "s") << ")\n";
      if (run_trace) {
        for (const Config& cfg : replay(pda, word, runs.front())) {
          std::cout << format_config(pda, word, cfg) << "\n";
        }
      }
      return 0;
    }
    if (pda_lang->parsed()) {
      const Pda pda = load_pda(lang_in);
      for (const auto& word : enumerate_language(pda, lang_max, limits)) {
        std::cout << (word.empty() ? "eps" : render_word(pda, word)) << "\n";
      }
      return 0;
    }
    if (pda_chk->parsed()) {
      const Pda pda = load_pda(chk_in);
      const bool ok = is_unambiguous_upto(pda, chk_max, limits);
      std::cout << (ok ? "unambiguous" : "ambiguous") << " up to length "
                << chk_max << "\n";
      return ok ? 0 : 1;
    }
    if (pda_dot->parsed()) {
      const Pda pda = load_pda(dot_in);
      if (dot_out.empty()) {
        std::cout << to_dot(pda);
      } else {
        std::ofstream out(dot_out);
        out << to_dot(pda);
      }
      return 0;
    }
    if (series_cmd->parsed()) {
      return run_series(stat_name, leaf_bound, order, guess, holdout, format);
    }
    if (verify_cmd->parsed()) {
      bool all_pass = true;
      for (const auto& result : verify::run_suite(suite)) {
        std::cout << verify::format_result(result) << "\n";
        all_pass &= result.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
