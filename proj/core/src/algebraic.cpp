#include "treelang/algebraic.hpp"

#include <algorithm>
#include <stdexcept>

namespace treelang {

namespace {

using Matrix = std::vector<std::vector<BigRat>>;

// Null-space basis by Gauss-Jordan elimination over the rationals, in the
// reduced-row-echelon parametrization (one basis vector per free column).
std::vector<std::vector<BigRat>> nullspace(Matrix mat, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < ncols && row < static_cast<int>(mat.size()); ++col) {
    int pivot = -1;
    for (int i = row; i < static_cast<int>(mat.size()); ++i) {
      if (mat[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(mat[row], mat[pivot]);
    const BigRat pv = mat[row][col];
    for (int j = col; j < ncols; ++j) mat[row][j] /= pv;
    for (int i = 0; i < static_cast<int>(mat.size()); ++i) {
      if (i == row || mat[i][col] == 0) continue;
      const BigRat f = mat[i][col];
      for (int j = col; j < ncols; ++j) mat[i][j] -= f * mat[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<std::vector<BigRat>> basis;
  std::vector<char> is_pivot(ncols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<BigRat> v(ncols, 0);
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -mat[i][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BigInt> normalize(const std::vector<BigRat>& v) {
  BigInt den = 1;
  for (const BigRat& x : v) {
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  }
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  for (const BigRat& x : v) {
    ints.push_back(boost::multiprecision::numerator(x) *
                   (den / boost::multiprecision::denominator(x)));
  }
  BigInt g = 0;
  for (const BigInt& x : ints) g = boost::multiprecision::gcd(g, x);
  if (g > 1) {
    for (BigInt& x : ints) x /= g;
  }
  for (const BigInt& x : ints) {
    if (x != 0) {
      if (x < 0) {
        for (BigInt& y : ints) y = -y;
      }
      break;
    }
  }
  return ints;
}

}  // namespace

std::string to_string(const AlgebraicEquation& eq) {
  std::string out;
  for (int j = 0; j <= eq.deg_f; ++j) {
    std::string group;
    for (int i = 0; i <= eq.deg_t; ++i) {
      const BigInt& c = eq.coeff(i, j);
      if (c == 0) continue;
      if (!group.empty()) group += c > 0 ? " + " : " - ";
      BigInt a = boost::multiprecision::abs(c);
      if (group.empty() && c < 0) group += "-";
      if (a != 1 || i == 0) group += a.str();
      if (i > 0) {
        if (a != 1) group += "*";
        group += i == 1 ? "t" : "t^" + std::to_string(i);
      }
    }
    if (group.empty()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + group + ")";
    if (j == 1) {
      out += "*F";
    } else if (j > 1) {
      out += "*F^" + std::to_string(j);
    }
  }
  if (out.empty()) out = "0";
  return out + " = 0";
}

bool equivalent(const AlgebraicEquation& a, const AlgebraicEquation& b) {
  // compare as polynomials; degrees may differ by zero padding
  const int dt = std::max(a.deg_t, b.deg_t);
  const int df = std::max(a.deg_f, b.deg_f);
  auto at = [&](const AlgebraicEquation& e, int i, int j) -> BigInt {
    if (i > e.deg_t || j > e.deg_f) return 0;
    return e.coeff(i, j);
  };
  std::vector<BigRat> flat_a, flat_b;
  for (int i = 0; i <= dt; ++i) {
    for (int j = 0; j <= df; ++j) {
      flat_a.emplace_back(at(a, i, j));
      flat_b.emplace_back(at(b, i, j));
    }
  }
  return normalize(flat_a) == normalize(flat_b);
}

std::optional<AlgebraicEquation> guess_algebraic(const CoefficientSeries& series,
                                                 int max_deg_t, int max_deg_f,
                                                 int holdout) {
  if (holdout < 0) throw std::invalid_argument("negative holdout");
  const int n_coeffs = static_cast<int>(series.coeffs.size());
  // F^j truncated to the full order
  std::vector<std::vector<BigInt>> fpow(max_deg_f + 1);
  fpow[0].assign(n_coeffs, 0);
  fpow[0][0] = 1;
  for (int j = 1; j <= max_deg_f; ++j) {
    fpow[j].assign(n_coeffs, 0);
    for (int a = 0; a < n_coeffs; ++a) {
      if (fpow[j - 1][a] == 0) continue;
      for (int b = 0; a + b < n_coeffs; ++b) {
        fpow[j][a + b] += fpow[j - 1][a] * series.coeffs[b];
      }
    }
  }

  std::vector<std::pair<int, int>> candidates;
  for (int dt = 0; dt <= max_deg_t; ++dt) {
    for (int df = 0; df <= max_deg_f; ++df) candidates.emplace_back(dt, df);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) {
              if (a.first + a.second != b.first + b.second) {
                return a.first + a.second < b.first + b.second;
              }
              return a < b;
            });

  bool any_testable = false;
  for (const auto& [dt, df] : candidates) {
    const int unknowns = (dt + 1) * (df + 1);
    if (unknowns + holdout > n_coeffs) continue;
    any_testable = true;
    const int fit_rows = n_coeffs - holdout;
    Matrix rows(fit_rows, std::vector<BigRat>(unknowns));
    for (int k = 0; k < fit_rows; ++k) {
      int col = 0;
      for (int i = 0; i <= dt; ++i) {
        for (int j = 0; j <= df; ++j, ++col) {
          rows[k][col] = k - i >= 0 ? BigRat(fpow[j][k - i]) : BigRat(0);
        }
      }
    }
    std::vector<std::vector<BigInt>> normalized;
    for (const auto& v : nullspace(std::move(rows), unknowns)) {
      normalized.push_back(normalize(v));
    }
    std::sort(normalized.begin(), normalized.end());
    for (const std::vector<BigInt>& vec : normalized) {
      // validate against every available coefficient, holdout included
      bool ok = true;
      for (int k = 0; k < n_coeffs && ok; ++k) {
        BigInt sum = 0;
        int col = 0;
        for (int i = 0; i <= dt; ++i) {
          for (int j = 0; j <= df; ++j, ++col) {
            if (k - i >= 0 && vec[col] != 0) sum += vec[col] * fpow[j][k - i];
          }
        }
        ok = sum == 0;
      }
      if (ok) {
        AlgebraicEquation eq;
        eq.deg_t = dt;
        eq.deg_f = df;
        eq.coeffs = vec;
        return eq;
      }
    }
  }
  if (!any_testable) {
    throw std::invalid_argument(
        "series too short for the requested degree bounds and holdout");
  }
  return std::nullopt;
}

}  // namespace treelang
