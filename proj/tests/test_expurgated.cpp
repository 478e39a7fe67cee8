#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <Eigen/Dense>

#include "typewriter/expurgated.hpp"

using namespace typewriter;

namespace {

Eigen::Matrix<double, 5, 5> as_eigen(const BhattacharyyaMatrix& m) {
  Eigen::Matrix<double, 5, 5> e;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) e(i, j) = m.entries[i][j];
  }
  return e;
}

// Grid supremum of E_x^2(rho) - rho R over rho in [1, rho_max].
double grid_sup(double rate, double rho_max, int steps) {
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i <= steps; ++i) {
    const double rho = 1.0 + (rho_max - 1.0) * i / steps;
    best = std::max(best, ex_exponent_inf(rho) - rho * rate);
  }
  return best;
}

bool pairwise_non_confusable(const Code& code) {
  for (std::size_t a = 0; a < code.size(); ++a) {
    for (std::size_t b = a + 1; b < code.size(); ++b) {
      bool all = true;
      for (std::size_t i = 0; i < code.length(); ++i) all = all && symbols_confusable(code.words[a][i], code.words[b][i]);
      if (all) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("g1_matrix structure") {
  const auto m1 = g1_matrix(1.0);
  CHECK(m1.alpha == 0.5);
  const auto m2 = g1_matrix(2.0);
  CHECK(m2.alpha == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(g1_matrix(1e6).alpha == doctest::Approx(1.0).epsilon(1e-6));
  for (int i = 0; i < 5; ++i) {
    double row = 0;
    for (int j = 0; j < 5; ++j) {
      row += m2.entries[i][j];
      CHECK(m2.entries[i][j] == m2.entries[j][i]);
      CHECK(m2.entries[i][j] == m2.entries[(i + 1) % 5][(j + 1) % 5]);
    }
    CHECK(m2.entries[i][i] == 1.0);
    CHECK(m2.entries[i][(i + 2) % 5] == 0.0);
    CHECK(row == doctest::Approx(1.0 + 2.0 * m2.alpha));
  }
  CHECK_THROWS_AS(g1_matrix(0.99), std::domain_error);
}

TEST_CASE("circulant eigenvalues agree with a generic eigensolver") {
  CHECK(circulant_eigenvalues(1.0)[0] == doctest::Approx(2.0).epsilon(1e-15));
  for (double rho : {1.0, 1.2, rho_bar(), 1.7, 2.0, 5.0, 40.0}) {
    const auto ev = circulant_eigenvalues(rho);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 5, 5>> solver(as_eigen(g1_matrix(rho)));
    std::array<double, 5> ours = ev;
    std::sort(ours.begin(), ours.end());
    for (int k = 0; k < 5; ++k) CHECK(std::fabs(ours[k] - solver.eigenvalues()(k)) <= 1e-10);
    for (int k = 0; k < 5; ++k) {
      CHECK(ev[k] == doctest::Approx(1.0 + std::exp2(1.0 - 1.0 / rho) * std::cos(2 * std::numbers::pi * k / 5)));
    }
  }
}

TEST_CASE("rho_bar") {
  CHECK(std::fabs(rho_bar() - 1.4404) <= 5e-4);
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(rho_bar() == doctest::Approx(1.0 / std::log2(golden)).epsilon(1e-14));
  CHECK(2.0 * std::cos(std::numbers::pi / 5) == doctest::Approx(golden).epsilon(1e-15));
  const auto ev = circulant_eigenvalues(rho_bar());
  CHECK(std::fabs(*std::min_element(ev.begin(), ev.end())) <= 1e-10);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 5, 5>> solver(as_eigen(g1_matrix(rho_bar())));
  CHECK(std::fabs(solver.eigenvalues()(0)) <= 1e-9);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 5, 5>> above(as_eigen(g1_matrix(rho_bar() + 1e-3)));
  CHECK(above.eigenvalues()(0) < 0.0);
}

TEST_CASE("ex_exponent_inf") {
  CHECK(ex_exponent_inf(1.0) == doctest::Approx(std::log2(2.5)).epsilon(1e-14));
  CHECK(ex_exponent_inf(2.0) == doctest::Approx(std::log2(5.0)).epsilon(1e-14));
  const double rb = rho_bar();
  CHECK(ex_exponent_inf(rb) == doctest::Approx(rb * std::log2(5.0) / 2).epsilon(1e-9));
  CHECK(ex_exponent_inf(rb) == doctest::Approx(1.67227).epsilon(1e-5));
  const double left = -rb * std::log2((1 + std::exp2(1 - 1 / rb)) / 5);
  CHECK(std::fabs(left - rb * std::log2(5.0) / 2) <= 1e-9);
  CHECK(std::fabs(ex_exponent_inf(rb - 1e-9) - ex_exponent_inf(rb + 1e-9)) <= 1e-8);
  CHECK_THROWS_AS(ex_exponent_inf(0.5), std::domain_error);
}

TEST_CASE("q_form examples") {
  for (double rho : {1.0, 1.3, 2.0, 7.0}) {
    CHECK(q_form(rho, uniform_distribution(1)) == doctest::Approx((1 + std::exp2(1 - 1 / rho)) / 5).epsilon(1e-14));
    CHECK(q_form(rho, code_indicator(shannon_code2())) == doctest::Approx(0.2).epsilon(1e-14));
  }
  CHECK(q_form(1.0, uniform_distribution(1)) == doctest::Approx(0.4).epsilon(1e-15));
  InputDistribution point{1, {1, 0, 0, 0, 0}};
  CHECK(q_form(1.7, point) == 1.0);
  // Kronecker structure: Q^2 of a product is the product of Q^1
  InputDistribution p{1, {0.1, 0.2, 0.3, 0.15, 0.25}};
  InputDistribution r{1, {0.3, 0.1, 0.1, 0.4, 0.1}};
  CHECK(q_form(1.2, product_distribution(p, r)) == doctest::Approx(q_form(1.2, p) * q_form(1.2, r)).epsilon(1e-13));
}

TEST_CASE("q_form errors") {
  InputDistribution bad{3, std::vector<double>(125, 1.0 / 125)};
  CHECK_THROWS_AS(q_form(1.0, bad), std::domain_error);
  InputDistribution short_p{1, {1.0}};
  CHECK_THROWS_AS(q_form(1.0, short_p), std::invalid_argument);
  CHECK_THROWS_AS(q_form(0.5, uniform_distribution(1)), std::domain_error);
  CHECK_THROWS_AS(product_distribution(uniform_distribution(2), uniform_distribution(1)), std::domain_error);
}

TEST_CASE("exact Q^2 coefficients") {
  const Code code = shannon_code2();
  std::vector<Rational> probs(25, Rational(0));
  for (const auto& w : code.words) probs[word_index(w, 5)] = Rational(1, 5);
  const auto c = q_form_coefficients(2, probs);
  REQUIRE(c.size() == 3);
  CHECK(c[0] == Rational(1, 5));
  CHECK(c[1].numerator() == 0);
  CHECK(c[2].numerator() == 0);

  // uniform on Z_5^2: (1 + 2 alpha)^2 / 25 = (1 + 4 alpha + 4 alpha^2) / 25
  std::vector<Rational> uniform(25, Rational(1, 25));
  const auto u = q_form_coefficients(2, uniform);
  CHECK(u[0] == Rational(1, 25));
  CHECK(u[1] == Rational(4, 25));
  CHECK(u[2] == Rational(4, 25));
  CHECK_THROWS_AS(q_form_coefficients(2, std::vector<Rational>(5, Rational(1, 5))), std::invalid_argument);
}

TEST_CASE("e_ex2 against a grid supremum") {
  CHECK(std::fabs(e_ex2(std::log2(2.5))) <= 1e-15);
  CHECK(e_ex2(1.2) == doctest::Approx(std::log2(2.5) - 1.2).epsilon(1e-14));
  CHECK(e_ex2(1.2) == doctest::Approx(0.121928).epsilon(1e-5));
  CHECK(std::fabs(grid_sup(1.2, 50.0, 49000) - e_ex2(1.2)) <= 1e-6);
  CHECK(std::fabs(grid_sup(1.3, 50.0, 49000) - e_ex2(1.3)) <= 1e-6);
  CHECK(std::isinf(e_ex2(1.0)));
  // below log sqrt(5) the grid supremum keeps growing with the grid
  const double s10 = grid_sup(1.0, 10.0, 9000);
  const double s20 = grid_sup(1.0, 20.0, 19000);
  const double s40 = grid_sup(1.0, 40.0, 39000);
  CHECK(s20 > s10 + 1.0);
  CHECK(s40 > s20 + 2.0);
  CHECK_THROWS_AS(e_ex2(0.0), std::domain_error);
  CHECK_THROWS_AS(e_ex2(-1.0), std::domain_error);
}

TEST_CASE("shannon_code2") {
  const Code code = shannon_code2();
  CHECK(code.size() == 5);
  CHECK(code.length() == 2);
  CHECK(pairwise_non_confusable(code));
  Code classic{5, {}};
  for (int i = 0; i < 5; ++i) classic.words.push_back({static_cast<Symbol>(i), static_cast<Symbol>(2 * i % 5)});
  CHECK(pairwise_non_confusable(classic));
  // lexicographic tie-break: the first word is 00
  CHECK(code.words.front() == Word{0, 0});
  for (std::size_t i = 1; i < code.size(); ++i) CHECK(word_index(code.words[i - 1], 5) < word_index(code.words[i], 5));
  // no sixth word fits
  for (std::size_t x = 0; x < 25; ++x) {
    Code bigger = code;
    const Word w = word_from_index(x, 2, 5);
    if (std::find(code.words.begin(), code.words.end(), w) != code.words.end()) continue;
    bigger.words.push_back(w);
    CHECK_FALSE(pairwise_non_confusable(bigger));
  }
}

TEST_CASE("symbols_confusable") {
  CHECK(symbols_confusable(0, 0));
  CHECK(symbols_confusable(0, 1));
  CHECK(symbols_confusable(0, 4));
  CHECK_FALSE(symbols_confusable(0, 2));
  CHECK_FALSE(symbols_confusable(3, 0));
}
