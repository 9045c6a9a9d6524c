#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "treelang/bigint.hpp"
#include "treelang/tree.hpp"

namespace treelang {

/// Truncated power series with exact integer coefficients; coeffs[n] is the
/// coefficient of t^n, n counting tree edges starting at n = 0.
struct CoefficientSeries {
  std::vector<BigInt> coeffs;

  int truncation_order() const { return static_cast<int>(coeffs.size()) - 1; }
  bool operator==(const CoefficientSeries&) const = default;
};

std::string to_string(const CoefficientSeries& s);

enum class Dependence { kPlanar, kRooted, kUnrooted };

/// A per-tree integer statistic to be summed over Dyck words.  A statistic
/// declared kUnrooted must agree on trees with equal unrooted canonical
/// codes (checked by tests, not enforced here).
struct TreeStatistic {
  std::string name;
  Dependence dependence = Dependence::kPlanar;
  std::function<std::int64_t(const PlanarTree&)> eval;
};

TreeStatistic trivial_statistic();
TreeStatistic edge_count_statistic();
TreeStatistic star_norm_statistic();
/// Configuration-space dimension: edges plus star-norm.
TreeStatistic dimension_statistic();
/// Subtree count, zeroed on trees with more than leaf_bound leaves when a
/// bound is given.
TreeStatistic subtree_statistic(std::optional<int> leaf_bound);
/// Subtree count minus (2n+1) on leaf-bounded trees, zero elsewhere.
TreeStatistic kl_statistic(int leaf_bound);

/// Hilbert-Dyck series of a statistic: coeffs[n] = sum of stat(T_p(w)) over
/// the Dyck words w with n edges, for n = 0..order.  Exhaustive enumeration;
/// fast up to order ~16, rejected above 20.
CoefficientSeries hilbert_dyck(const TreeStatistic& stat, int order);

/// Catalan generating series (the trivial statistic).
CoefficientSeries catalan_series(int order);

CoefficientSeries star_norm_series(int order);

/// Series of s_l: subtree counts cut off at l leaves; l >= 2 required.
CoefficientSeries s_l_series(int l, int order);

/// Series of KL_1(cone(T)) over leaf-bounded words; l >= 2 required.
CoefficientSeries kl_module_series(int l, int order);

/// Expands (1 - sqrt(1-4t)) / (2t) by exact binomial-series arithmetic and
/// compares with the enumerated Catalan series.
bool catalan_closed_form_check(int order);

// Exact truncated-series arithmetic.  Binary operations throw
// std::invalid_argument on mismatched truncation orders.
CoefficientSeries add(const CoefficientSeries& a, const CoefficientSeries& b);
CoefficientSeries multiply(const CoefficientSeries& a,
                           const CoefficientSeries& b);
CoefficientSeries derivative(const CoefficientSeries& a);
/// Substitutes t -> c * t for an exact integer scalar c.
CoefficientSeries scale_variable(const CoefficientSeries& a, const BigInt& c);

}  // namespace treelang
