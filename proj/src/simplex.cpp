#include "typewriter/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace typewriter {

namespace {

using Real = long double;
constexpr Real kPivotEps = 1e-12L;
constexpr Real kCostEps = 1e-11L;

// Tableau rows 0..m-1 are constraints, row m is the objective (reduced costs,
// stored as c_j - z_j). The last column holds the right-hand side.
class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), cols_(cols), t_((rows + 1) * (cols + 1), 0.0L) {}

  Real& at(int r, int c) { return t_[r * (cols_ + 1) + c]; }
  Real at(int r, int c) const { return t_[r * (cols_ + 1) + c]; }
  Real& rhs(int r) { return at(r, cols_); }
  int rows() const { return m_; }
  int cols() const { return cols_; }

  void pivot(int row, int col) {
    const Real p = at(row, col);
    for (int c = 0; c <= cols_; ++c) at(row, c) /= p;
    for (int r = 0; r <= m_; ++r) {
      if (r == row) continue;
      const Real factor = at(r, col);
      if (factor == 0.0L) continue;
      for (int c = 0; c <= cols_; ++c) at(r, c) -= factor * at(row, c);
    }
  }

 private:
  int m_;
  int cols_;
  std::vector<Real> t_;
};

// Runs Bland's-rule iterations on the objective row over the allowed columns.
LpStatus iterate(Tableau& t, std::vector<int>& basis, const std::vector<bool>& allowed,
                 int& iterations, int max_iterations) {
  const int m = t.rows();
  while (true) {
    if (iterations >= max_iterations) return LpStatus::kIterationLimit;
    int enter = -1;
    for (int c = 0; c < t.cols(); ++c) {
      if (allowed[c] && t.at(m, c) < -kCostEps) {
        enter = c;
        break;
      }
    }
    if (enter < 0) return LpStatus::kOptimal;

    int leave = -1;
    Real best_ratio = std::numeric_limits<Real>::infinity();
    for (int r = 0; r < m; ++r) {
      const Real coef = t.at(r, enter);
      if (coef <= kPivotEps) continue;
      const Real ratio = t.rhs(r) / coef;
      if (ratio < best_ratio - kPivotEps ||
          (std::fabs(ratio - best_ratio) <= kPivotEps && basis[r] < basis[leave])) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave < 0) return LpStatus::kUnbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
    ++iterations;
  }
}

}  // namespace

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration-limit";
    case LpStatus::kNumericFailure: return "numeric-failure";
  }
  return "unknown";
}

LpStatus lp_status_from_string(const std::string& text) {
  for (auto s : {LpStatus::kOptimal, LpStatus::kInfeasible, LpStatus::kUnbounded,
                 LpStatus::kIterationLimit, LpStatus::kNumericFailure}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown LP status '" + text + "'");
}

LpResult solve_lp(const LinearProgram& lp, int max_iterations) {
  const int m = static_cast<int>(lp.b.size());
  const int n = static_cast<int>(lp.c.size());
  if (static_cast<int>(lp.a.size()) != m) throw std::invalid_argument("solve_lp: A and b disagree");
  for (const auto& row : lp.a) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("solve_lp: ragged A");
  }

  // Columns: x (n), slack/surplus (m), artificial (one per negative row).
  std::vector<int> artificial_row;
  for (int r = 0; r < m; ++r) {
    if (lp.b[r] < 0) artificial_row.push_back(r);
  }
  const int n_art = static_cast<int>(artificial_row.size());
  const int cols = n + m + n_art;
  Tableau t(m, cols);
  std::vector<int> basis(m);
  int art = 0;
  for (int r = 0; r < m; ++r) {
    const Real sign = lp.b[r] < 0 ? -1.0L : 1.0L;
    for (int j = 0; j < n; ++j) t.at(r, j) = sign * lp.a[r][j];
    t.at(r, n + r) = sign;
    t.rhs(r) = sign * lp.b[r];
    if (lp.b[r] < 0) {
      t.at(r, n + m + art) = 1.0L;
      basis[r] = n + m + art;
      ++art;
    } else {
      basis[r] = n + r;
    }
  }

  LpResult result;
  std::vector<bool> allowed(cols, true);

  if (n_art > 0) {
    // Phase 1: minimise the sum of artificials.
    for (int c = 0; c <= cols; ++c) t.at(m, c) = 0.0L;
    for (int c = n + m; c < cols; ++c) t.at(m, c) = 1.0L;
    for (int r = 0; r < m; ++r) {
      if (basis[r] >= n + m) {
        for (int c = 0; c <= cols; ++c) t.at(m, c) -= t.at(r, c);
      }
    }
    const LpStatus s = iterate(t, basis, allowed, result.iterations, max_iterations);
    if (s == LpStatus::kIterationLimit) {
      result.status = s;
      return result;
    }
    Real scale = 1.0L;
    for (int r : artificial_row) scale += std::fabs(static_cast<Real>(lp.b[r]));
    if (-t.rhs(m) > 1e-9L * scale) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Drive zero-level artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (basis[r] < n + m) continue;
      for (int c = 0; c < n + m; ++c) {
        if (std::fabs(t.at(r, c)) > kPivotEps) {
          t.pivot(r, c);
          basis[r] = c;
          break;
        }
      }
    }
    for (int c = n + m; c < cols; ++c) allowed[c] = false;
  }

  // Phase 2.
  for (int c = 0; c <= cols; ++c) t.at(m, c) = 0.0L;
  for (int j = 0; j < n; ++j) t.at(m, j) = lp.c[j];
  for (int r = 0; r < m; ++r) {
    const Real cb = basis[r] < n ? lp.c[basis[r]] : 0.0L;
    if (cb == 0.0L) continue;
    for (int c = 0; c <= cols; ++c) t.at(m, c) -= cb * t.at(r, c);
  }
  result.status = iterate(t, basis, allowed, result.iterations, max_iterations);
  if (result.status != LpStatus::kOptimal) return result;

  result.x.assign(n, 0.0);
  for (int r = 0; r < m; ++r) {
    if (basis[r] < n) result.x[basis[r]] = static_cast<double>(t.rhs(r));
  }
  long double obj = 0.0L;
  for (int j = 0; j < n; ++j) obj += static_cast<long double>(lp.c[j]) * result.x[j];
  result.objective = static_cast<double>(obj);
  return result;
}

}  // namespace typewriter
