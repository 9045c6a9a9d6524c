#include "treelang/series.hpp"

#include <future>
#include <stdexcept>
#include <thread>

#include "treelang/dyck.hpp"

namespace treelang {

std::string to_string(const CoefficientSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    if (i) out += ',';
    out += s.coeffs[i].str();
  }
  return out;
}

TreeStatistic trivial_statistic() {
  return {"trivial", Dependence::kUnrooted,
          [](const PlanarTree&) -> std::int64_t { return 1; }};
}

TreeStatistic edge_count_statistic() {
  return {"edges", Dependence::kUnrooted, [](const PlanarTree& t) {
            return static_cast<std::int64_t>(t.n_edges());
          }};
}

TreeStatistic star_norm_statistic() {
  return {"starnorm", Dependence::kUnrooted,
          [](const PlanarTree& t) { return star_norm(t); }};
}

TreeStatistic dimension_statistic() {
  return {"dimension", Dependence::kUnrooted, [](const PlanarTree& t) {
            return static_cast<std::int64_t>(t.n_edges()) + star_norm(t);
          }};
}

TreeStatistic subtree_statistic(std::optional<int> leaf_bound) {
  std::string name = "subtrees";
  if (leaf_bound) name += "<=" + std::to_string(*leaf_bound) + "leaves";
  return {std::move(name), Dependence::kUnrooted,
          [leaf_bound](const PlanarTree& t) -> std::int64_t {
            if (leaf_bound && leaf_count(t) > *leaf_bound) return 0;
            return subtree_count(t);
          }};
}

TreeStatistic kl_statistic(int leaf_bound) {
  return {"kl1<=" + std::to_string(leaf_bound) + "leaves",
          Dependence::kUnrooted,
          [leaf_bound](const PlanarTree& t) -> std::int64_t {
            if (leaf_count(t) > leaf_bound) return 0;
            return subtree_count(t) - (2 * t.n_edges() + 1);
          }};
}

namespace {

// Sums stat over the completions of the prefix currently held by `b`.
std::int64_t sum_completions(const TreeStatistic& stat, int n, TreeBuilder& b,
                             int ups, int downs) {
  if (ups + downs == 2 * n) return stat.eval(b.tree());
  std::int64_t total = 0;
  if (ups < n) {
    b.push_child();
    total += sum_completions(stat, n, b, ups + 1, downs);
    b.undo_push_child();
  }
  if (downs < ups) {
    const int saved = b.cursor();
    b.ascend();
    total += sum_completions(stat, n, b, ups, downs + 1);
    b.descend(saved);
  }
  return total;
}

// Dyck prefixes of the given length, in u < d order.
std::vector<std::string> dyck_prefixes(int n, int length) {
  std::vector<std::string> prefixes;
  std::string p;
  std::function<void(int, int)> gen = [&](int ups, int downs) {
    if (static_cast<int>(p.size()) == length) {
      prefixes.push_back(p);
      return;
    }
    if (ups < n) {
      p.push_back('u');
      gen(ups + 1, downs);
      p.pop_back();
    }
    if (downs < ups) {
      p.push_back('d');
      gen(ups, downs + 1);
      p.pop_back();
    }
  };
  gen(0, 0);
  return prefixes;
}

}  // namespace

CoefficientSeries hilbert_dyck(const TreeStatistic& stat, int order) {
  if (order < 0) throw std::invalid_argument("negative order");
  if (order > 20) {
    throw std::invalid_argument(
        "order above 20 needs more than c_20 ~ 6.5e9 word visits");
  }
  CoefficientSeries out;
  out.coeffs.resize(order + 1);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  for (int n = 0; n <= order; ++n) {
    // split large degrees at a shallow prefix across the available cores
    const int split_depth = (n >= 10 && hw > 1) ? std::min(8, 2 * n) : 0;
    const std::vector<std::string> prefixes = dyck_prefixes(n, split_depth);
    auto run_chunk = [&stat, n](const std::vector<std::string>& chunk) {
      std::int64_t total = 0;
      TreeBuilder b;
      for (const std::string& prefix : chunk) {
        b.reset();
        int ups = 0, downs = 0;
        for (char c : prefix) {
          if (c == 'u') {
            b.push_child();
            ++ups;
          } else {
            b.ascend();
            ++downs;
          }
        }
        total += sum_completions(stat, n, b, ups, downs);
      }
      return total;
    };
    if (prefixes.size() <= 1 || hw == 1) {
      out.coeffs[n] = run_chunk(prefixes);
    } else {
      std::vector<std::vector<std::string>> chunks(
          std::min<std::size_t>(hw, prefixes.size()));
      for (std::size_t i = 0; i < prefixes.size(); ++i) {
        chunks[i % chunks.size()].push_back(prefixes[i]);
      }
      std::vector<std::future<std::int64_t>> parts;
      for (auto& c : chunks) {
        parts.push_back(std::async(std::launch::async, run_chunk, c));
      }
      BigInt total = 0;
      for (auto& f : parts) total += f.get();
      out.coeffs[n] = total;
    }
  }
  return out;
}

CoefficientSeries catalan_series(int order) {
  CoefficientSeries out;
  out.coeffs.reserve(order + 1);
  for (int n = 0; n <= order; ++n) out.coeffs.push_back(catalan(n));
  return out;
}

CoefficientSeries star_norm_series(int order) {
  return hilbert_dyck(star_norm_statistic(), order);
}

CoefficientSeries s_l_series(int l, int order) {
  if (l < 2) throw std::invalid_argument("leaf bound must be >= 2");
  return hilbert_dyck(subtree_statistic(l), order);
}

CoefficientSeries kl_module_series(int l, int order) {
  if (l < 2) throw std::invalid_argument("leaf bound must be >= 2");
  return hilbert_dyck(kl_statistic(l), order);
}

bool catalan_closed_form_check(int order) {
  // sqrt(1-4t) via the binomial series with exact rationals
  const int N = order + 1;  // one extra order: the division by t shifts
  std::vector<BigRat> root(N + 1);
  root[0] = 1;
  for (int k = 1; k <= N; ++k) {
    // c_k = c_{k-1} * (1/2 - (k-1)) / k * (-4)
    root[k] = root[k - 1] * (BigRat(1, 2) - (k - 1)) / k * -4;
  }
  // (1 - sqrt(1-4t)) / (2t)
  std::vector<BigRat> numer(N + 1);
  numer[0] = BigRat(1) - root[0];
  for (int k = 1; k <= N; ++k) numer[k] = -root[k];
  if (numer[0] != 0) return false;
  CoefficientSeries closed;
  closed.coeffs.resize(order + 1);
  for (int n = 0; n <= order; ++n) {
    BigRat c = numer[n + 1] / 2;
    if (boost::multiprecision::denominator(c) != 1) return false;
    closed.coeffs[n] = boost::multiprecision::numerator(c);
  }
  return closed == hilbert_dyck(trivial_statistic(), order);
}

namespace {

void require_same_order(const CoefficientSeries& a,
                        const CoefficientSeries& b) {
  if (a.coeffs.size() != b.coeffs.size()) {
    throw std::invalid_argument("truncation orders differ");
  }
}

}  // namespace

CoefficientSeries add(const CoefficientSeries& a, const CoefficientSeries& b) {
  require_same_order(a, b);
  CoefficientSeries out = a;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

CoefficientSeries multiply(const CoefficientSeries& a,
                           const CoefficientSeries& b) {
  require_same_order(a, b);
  CoefficientSeries out;
  out.coeffs.assign(a.coeffs.size(), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.coeffs.size(); ++j) {
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return out;
}

CoefficientSeries derivative(const CoefficientSeries& a) {
  CoefficientSeries out;
  if (a.coeffs.size() <= 1) {
    out.coeffs.assign(a.coeffs.size(), 0);
    return out;
  }
  out.coeffs.resize(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    out.coeffs[i - 1] = a.coeffs[i] * static_cast<int>(i);
  }
  return out;
}

CoefficientSeries scale_variable(const CoefficientSeries& a, const BigInt& c) {
  CoefficientSeries out = a;
  BigInt power = 1;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) {
    out.coeffs[i] *= power;
    power *= c;
  }
  return out;
}

}  // namespace treelang
