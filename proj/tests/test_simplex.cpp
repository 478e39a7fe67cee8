#include <doctest.h>

#include <stdexcept>

#include "typewriter/simplex.hpp"

using namespace typewriter;

TEST_CASE("textbook maximisation") {
  // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18 -> (2, 6), 36
  LinearProgram lp{{{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}, {-3, -5}};
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.x[0] == doctest::Approx(2.0));
  CHECK(r.x[1] == doctest::Approx(6.0));
  CHECK(r.objective == doctest::Approx(-36.0));
}

TEST_CASE("negative right-hand sides need phase one") {
  // min x + y s.t. x + y >= 2, x - y <= 1 -> objective 2
  LinearProgram lp{{{-1, -1}, {1, -1}}, {-2, 1}, {1, 1}};
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == doctest::Approx(2.0));
  CHECK(r.x[0] + r.x[1] == doctest::Approx(2.0));
}

TEST_CASE("infeasible and unbounded programs") {
  // x <= 1 and x >= 2
  LinearProgram infeasible{{{1}, {-1}}, {1, -2}, {1}};
  CHECK(solve_lp(infeasible).status == LpStatus::kInfeasible);
  // min -x with no upper bound on x
  LinearProgram unbounded{{{-1}}, {0}, {-1}};
  CHECK(solve_lp(unbounded).status == LpStatus::kUnbounded);
}

TEST_CASE("degenerate program terminates under Bland's rule") {
  // Beale's cycling example, in minimisation form
  LinearProgram lp{{{0.25, -60, -0.04, 9}, {0.5, -90, -0.02, 3}, {0, 0, 1, 0}},
                   {0, 0, 1},
                   {-0.75, 150, -0.02, 6}};
  const LpResult r = solve_lp(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  CHECK(r.objective == doctest::Approx(-0.05));
}

TEST_CASE("deterministic and iteration-capped") {
  LinearProgram lp{{{1, 0}, {0, 2}, {3, 2}}, {4, 12, 18}, {-3, -5}};
  const LpResult a = solve_lp(lp);
  const LpResult b = solve_lp(lp);
  CHECK(a.x == b.x);
  CHECK(a.iterations == b.iterations);
  CHECK(solve_lp(lp, 0).status == LpStatus::kIterationLimit);
}

TEST_CASE("malformed programs") {
  LinearProgram ragged{{{1, 2}, {1}}, {1, 1}, {1, 1}};
  CHECK_THROWS_AS(solve_lp(ragged), std::invalid_argument);
  LinearProgram mismatch{{{1}}, {1, 2}, {1}};
  CHECK_THROWS_AS(solve_lp(mismatch), std::invalid_argument);
}

TEST_CASE("status strings round trip") {
  for (auto s : {LpStatus::kOptimal, LpStatus::kInfeasible, LpStatus::kUnbounded, LpStatus::kIterationLimit,
                 LpStatus::kNumericFailure}) {
    CHECK(lp_status_from_string(to_string(s)) == s);
  }
  CHECK_THROWS_AS(lp_status_from_string("bogus"), std::invalid_argument);
}
