#pragma once

#include <array>
#include <vector>

#include <boost/rational.hpp>

#include "typewriter/words.hpp"

namespace typewriter {

// Typewriter confusability on Z_5: a ~ b iff a - b in {0, +1, -1} mod 5.
bool symbols_confusable(Symbol a, Symbol b, int q = 5);

// g_1^{(1/rho)}: 1 on the diagonal, alpha = 2^{-1/rho} on the cyclic
// off-diagonals, 0 elsewhere.
struct BhattacharyyaMatrix {
  double rho = 1;
  double alpha = 0.5;
  std::array<std::array<double, 5>, 5> entries{};
};

BhattacharyyaMatrix g1_matrix(double rho);

// lambda_k = 1 + 2^{1-1/rho} cos(2 pi k / 5), k = 0..4.
std::array<double, 5> circulant_eigenvalues(double rho);

// Largest rho for which g1_matrix(rho) is positive semidefinite:
// log 2 / log(2 cos(pi/5)).
double rho_bar();

// E_x^inf(rho) = E_x^2(rho), piecewise at rho_bar.
double ex_exponent_inf(double rho);

// Distribution on Z_5^n, n in {1, 2}, indexed by word_index().
struct InputDistribution {
  int n = 1;
  std::vector<double> probs;
};

InputDistribution uniform_distribution(int n);
InputDistribution product_distribution(const InputDistribution& p,
                                       const InputDistribution& r);
InputDistribution code_indicator(const Code& code);

// Q^n(rho, P) by the full double sum over Z_5^n x Z_5^n, with 0^{1/rho} = 0.
double q_form(double rho, const InputDistribution& p);

using Rational = boost::rational<long long>;

// Exact form of Q^n for rational P: Q^n(rho, P) = sum_k c_k alpha^k where k
// counts the coordinates in which the pair differs by +-1. Returns c_0..c_n.
std::vector<Rational> q_form_coefficients(int n, const std::vector<Rational>& probs);

// sup_{rho >= 1} [E_x^2(rho) - rho R]; +inf below log sqrt(5).
double e_ex2(double rate);

// Lexicographically smallest maximum set of pairwise non-confusable words of
// length 2. Throws if it does not have exactly five words.
Code shannon_code2();

}  // namespace typewriter
