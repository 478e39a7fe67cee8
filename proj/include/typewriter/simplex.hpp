#pragma once

#include <string>
#include <vector>

namespace typewriter {

// minimize c^T x subject to A x <= b, x >= 0. Entries of b may be negative.
struct LinearProgram {
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<double> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit, kNumericFailure };

std::string to_string(LpStatus status);
LpStatus lp_status_from_string(const std::string& text);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective = 0.0;
  int iterations = 0;
};

// Dense two-phase primal simplex with Bland's rule. Deterministic.
LpResult solve_lp(const LinearProgram& lp, int max_iterations = 20000);

}  // namespace typewriter
