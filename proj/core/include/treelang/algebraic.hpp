#pragma once

#include <optional>
#include <string>
#include <vector>

#include "treelang/bigint.hpp"
#include "treelang/series.hpp"

namespace treelang {

/// A nonzero bivariate polynomial P(t, F) with integer coefficients;
/// coeffs[i * (deg_f + 1) + j] multiplies t^i F^j.  Stored content-free with
/// the first nonzero coefficient positive.
struct AlgebraicEquation {
  int deg_t = 0;
  int deg_f = 0;
  std::vector<BigInt> coeffs;

  const BigInt& coeff(int i, int j) const { return coeffs[i * (deg_f + 1) + j]; }
  bool operator==(const AlgebraicEquation&) const = default;
};

/// Canonical rendering, terms grouped by ascending F-power with ascending
/// t-powers inside, e.g. "(-4*t^2) + (2 - 12*t + 16*t^2)*F + (t^2 - 4*t^3)*F^2 = 0".
std::string to_string(const AlgebraicEquation& eq);

/// Two equations equal up to a scalar after content-and-sign normalization.
bool equivalent(const AlgebraicEquation& a, const AlgebraicEquation& b);

/// Searches for a nonzero P with deg_t <= max_deg_t, deg_f <= max_deg_f and
/// P(t, F(t)) = 0 to the full truncation order of `series`.  Candidate
/// degree bounds are visited in increasing total degree (ties: smaller
/// deg_t first); for each, the polynomial is fitted by exact rational
/// null-space computation on all but the last `holdout` coefficients and
/// kept only if it also annihilates those.  Ties inside one null space go
/// to the lexicographically smallest normalized coefficient vector.
///
/// Candidates needing more coefficients than available are skipped; if no
/// candidate is testable at all, throws std::invalid_argument.  Returns
/// nullopt when every testable candidate fails.
std::optional<AlgebraicEquation> guess_algebraic(const CoefficientSeries& series,
                                                 int max_deg_t, int max_deg_f,
                                                 int holdout);

}  // namespace treelang
