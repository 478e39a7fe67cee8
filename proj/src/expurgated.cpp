#include "typewriter/expurgated.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <fmt/core.h>

#include "typewriter/clique.hpp"

namespace typewriter {

namespace {

constexpr int kQ = 5;

int cyclic_offset(Symbol a, Symbol b, int q) { return ((a - b) % q + q) % q; }

void require_rho(double rho) {
  if (!(rho >= 1.0)) throw std::domain_error(fmt::format("rho = {} must be >= 1", rho));
}

void require_supported_length(int n) {
  if (n != 1 && n != 2) {
    throw std::domain_error(fmt::format("Q^n is only supported for n in {{1,2}}, got {}", n));
  }
}

std::size_t space_size(int n) { return n == 1 ? 5 : 25; }

}  // namespace

bool symbols_confusable(Symbol a, Symbol b, int q) {
  const int d = cyclic_offset(a, b, q);
  return d == 0 || d == 1 || d == q - 1;
}

BhattacharyyaMatrix g1_matrix(double rho) {
  require_rho(rho);
  BhattacharyyaMatrix m;
  m.rho = rho;
  m.alpha = std::exp2(-1.0 / rho);
  for (int i = 0; i < kQ; ++i) {
    for (int j = 0; j < kQ; ++j) {
      const int d = cyclic_offset(i, j, kQ);
      m.entries[i][j] = d == 0 ? 1.0 : (d == 1 || d == kQ - 1) ? m.alpha : 0.0;
    }
  }
  return m;
}

std::array<double, 5> circulant_eigenvalues(double rho) {
  require_rho(rho);
  std::array<double, 5> ev{};
  const double scale = std::exp2(1.0 - 1.0 / rho);
  for (int k = 0; k < kQ; ++k) {
    ev[k] = 1.0 + scale * std::cos(2.0 * std::numbers::pi * k / kQ);
  }
  return ev;
}

double rho_bar() { return 1.0 / std::log2(2.0 * std::cos(std::numbers::pi / 5.0)); }

double ex_exponent_inf(double rho) {
  require_rho(rho);
  if (rho <= rho_bar()) return -rho * std::log2((1.0 + std::exp2(1.0 - 1.0 / rho)) / 5.0);
  return rho * std::log2(5.0) / 2.0;
}

InputDistribution uniform_distribution(int n) {
  require_supported_length(n);
  const std::size_t size = space_size(n);
  return {n, std::vector<double>(size, 1.0 / static_cast<double>(size))};
}

InputDistribution product_distribution(const InputDistribution& p,
                                       const InputDistribution& r) {
  if (p.n != 1 || r.n != 1) throw std::domain_error("product_distribution: factors must have n = 1");
  InputDistribution out{2, std::vector<double>(25)};
  for (int a = 0; a < kQ; ++a) {
    for (int b = 0; b < kQ; ++b) out.probs[a * kQ + b] = p.probs[a] * r.probs[b];
  }
  return out;
}

InputDistribution code_indicator(const Code& code) {
  const int n = static_cast<int>(code.length());
  require_supported_length(n);
  InputDistribution out{n, std::vector<double>(space_size(n), 0.0)};
  for (const auto& w : code.words) out.probs[word_index(w, kQ)] += 1.0 / code.size();
  return out;
}

double q_form(double rho, const InputDistribution& p) {
  require_rho(rho);
  require_supported_length(p.n);
  const std::size_t size = space_size(p.n);
  if (p.probs.size() != size) throw std::invalid_argument("q_form: wrong distribution size");
  const auto g1 = g1_matrix(rho);
  double total = 0.0;
  for (std::size_t x1 = 0; x1 < size; ++x1) {
    const Word w1 = word_from_index(x1, p.n, kQ);
    for (std::size_t x2 = 0; x2 < size; ++x2) {
      const Word w2 = word_from_index(x2, p.n, kQ);
      double g = 1.0;
      for (int i = 0; i < p.n; ++i) g *= g1.entries[w1[i]][w2[i]];
      total += p.probs[x1] * p.probs[x2] * g;
    }
  }
  return total;
}

std::vector<Rational> q_form_coefficients(int n, const std::vector<Rational>& probs) {
  require_supported_length(n);
  const std::size_t size = space_size(n);
  if (probs.size() != size) throw std::invalid_argument("q_form_coefficients: wrong size");
  std::vector<Rational> coeff(n + 1, Rational(0));
  for (std::size_t x1 = 0; x1 < size; ++x1) {
    if (probs[x1].numerator() == 0) continue;
    const Word w1 = word_from_index(x1, n, kQ);
    for (std::size_t x2 = 0; x2 < size; ++x2) {
      if (probs[x2].numerator() == 0) continue;
      const Word w2 = word_from_index(x2, n, kQ);
      int adjacent = 0;
      bool zero = false;
      for (int i = 0; i < n; ++i) {
        const int d = cyclic_offset(w1[i], w2[i], kQ);
        if (d == 1 || d == kQ - 1) {
          ++adjacent;
        } else if (d != 0) {
          zero = true;
        }
      }
      if (!zero) coeff[adjacent] += probs[x1] * probs[x2];
    }
  }
  return coeff;
}

double e_ex2(double rate) {
  if (!(rate > 0.0)) throw std::domain_error("e_ex2: rate must be positive");
  // Above log sqrt(5) the supremum sits at rho = 1; below it the rho > rho_bar
  // branch grows without bound.
  if (rate < 0.5 * std::log2(5.0)) return std::numeric_limits<double>::infinity();
  return ex_exponent_inf(1.0) - rate;
}

Code shannon_code2() {
  constexpr int n = 2;
  const int vertices = kQ * kQ;
  Graph g(vertices);
  for (int a = 0; a < vertices; ++a) {
    const Word wa = word_from_index(a, n, kQ);
    for (int b = a + 1; b < vertices; ++b) {
      const Word wb = word_from_index(b, n, kQ);
      bool confusable = true;
      for (int i = 0; i < n; ++i) confusable = confusable && symbols_confusable(wa[i], wb[i]);
      if (!confusable) g.add_edge(a, b);
    }
  }
  const auto clique = max_clique(g);
  if (clique.size() != 5) {
    throw std::logic_error(fmt::format(
        "shannon_code2: maximum non-confusable set has {} words, expected 5", clique.size()));
  }
  Code code{kQ, {}};
  for (int v : clique) code.words.push_back(word_from_index(v, n, kQ));
  return code;
}

}  // namespace typewriter
