#include "typewriter/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include <fmt/core.h>

#include "typewriter/bounds.hpp"
#include "typewriter/channel.hpp"
#include "typewriter/construction.hpp"
#include "typewriter/expurgated.hpp"
#include "typewriter/fourier.hpp"
#include "typewriter/lp_certificate.hpp"
#include "typewriter/scalar_math.hpp"

namespace typewriter {

void SuiteResult::expect(bool ok, const std::string& message) {
  if (ok) return;
  pass = false;
  if (details.size() < 20) details.push_back(message);
}

namespace {

bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

// ---- scalar-math -----------------------------------------------------------

SuiteResult entropy_shape() {
  SuiteResult r;
  for (double q : {2.0, 3.0, 5.0, std::sqrt(5.0), 2.7}) {
    const double peak = (q - 1.0) / q;
    r.expect(close_rel(entropy_q(peak, q), std::log2(q), 1e-9), fmt::format("H_q peak value, q={}", q));
    constexpr int kGrid = 2000;
    const double h = 1.0 / kGrid;
    for (int i = 1; i < kGrid; ++i) {
      const double t = i * h;
      const double second = entropy_q(t - h, q) - 2.0 * entropy_q(t, q) + entropy_q(t + h, q);
      r.expect(second <= 1e-9, fmt::format("H_q not concave at t={}, q={}", t, q));
      r.expect(entropy_q(t, q) <= std::log2(q) + 1e-9, fmt::format("H_q exceeds log q at t={}", t));
    }
  }
  return r;
}

SuiteResult krawtchouk_orthogonality() {
  SuiteResult r;
  for (double qp : {2.0, 3.0, std::sqrt(5.0), 2.7}) {
    for (int n = 1; n <= 8; ++n) {
      for (int l = 0; l <= n; ++l) {
        for (int m = 0; m <= n; ++m) {
          double sum = 0.0;
          for (int u = 0; u <= n; ++u) {
            sum += std::pow(qp - 1.0, u) * std::exp2(log_binomial(n, u)) * krawtchouk(n, qp, l, u) *
                   krawtchouk(n, qp, m, u);
          }
          const double expected = l == m ? std::pow(qp, n) * std::pow(qp - 1.0, l) * std::exp2(log_binomial(n, l))
                                         : 0.0;
          const double scale = std::pow(qp, n) * std::pow(qp - 1.0, n) * std::exp2(log_binomial(n, n / 2));
          r.expect(std::fabs(sum - expected) <= 1e-6 * std::max(std::fabs(expected), l == m ? 1.0 : scale),
                   fmt::format("orthogonality n={} l={} m={} q'={}: {} vs {}", n, l, m, qp, sum, expected));
        }
      }
    }
  }
  return r;
}

SuiteResult krawtchouk_recurrence() {
  SuiteResult r;
  for (double qp : {2.0, 3.0, std::sqrt(5.0), 2.7}) {
    for (int n = 1; n <= 12; ++n) {
      for (int u = 0; u <= n; ++u) {
        double prev = 1.0;
        double cur = (qp - 1.0) * (n - 0) - qp * u;  // K_1
        r.expect(close_rel(krawtchouk(n, qp, 1, u), cur, 1e-9), "K_1 closed form");
        for (int l = 1; l < n; ++l) {
          const double next = (((qp - 1.0) * (n - l) + l - qp * u) * cur - (qp - 1.0) * (n - l + 1) * prev) / (l + 1);
          prev = cur;
          cur = next;
          r.expect(close_rel(krawtchouk(n, qp, l + 1, u), cur, 1e-9),
                   fmt::format("recurrence n={} l={} u={} q'={}", n, l + 1, u, qp));
        }
      }
    }
  }
  return r;
}

SuiteResult bisect_determinism() {
  SuiteResult r;
  auto f = [](double x) { return std::cos(x) - x; };
  const double first = bisect(f, 0.0, 1.0);
  for (int i = 0; i < 10; ++i) r.expect(bisect(f, 0.0, 1.0) == first, "bisect output changed between runs");
  r.expect(std::fabs(f(first)) < 1e-11, "bisect root residual");
  return r;
}

// ---- bound-curves ----------------------------------------------------------

SuiteResult curves_monotone() {
  SuiteResult r;
  const auto& c = bound_constants();
  const auto curves = sample_curves(c.zero_error_capacity, c.capacity, 1000);
  for (const auto& curve : curves) {
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
      const double e = curve.points[i].second;
      r.expect(std::isfinite(e), fmt::format("{} not finite at sample {}", curve.name, i));
      r.expect(e <= curve.points[i - 1].second + 1e-9,
               fmt::format("{} increases at R={}", curve.name, curve.points[i].first));
    }
  }
  return r;
}

SuiteResult gv_above_rex() {
  SuiteResult r;
  const auto& c = bound_constants();
  for (int i = 0; i <= 200; ++i) {
    const double rate = c.zero_error_capacity + (c.r_star - c.zero_error_capacity) * i / 200.0;
    r.expect(e_gv_star(rate) - e_rex(rate) >= -1e-12, fmt::format("E_GV* below E_r/ex at R={}", rate));
  }
  r.expect(e_gv_star(c.zero_error_capacity) - e_rex(c.zero_error_capacity) > 1e-3,
           "E_GV* does not strictly exceed E_r/ex at C0");
  return r;
}

SuiteResult sl_star_product() {
  SuiteResult r;
  const auto& c = bound_constants();
  const double anchor = e_lp1(c.zero_error_capacity);
  for (int i = 0; i <= 100; ++i) {
    const double rate = c.zero_error_capacity + (c.capacity - c.zero_error_capacity) * i / 100.0;
    r.expect(std::fabs(e_sl_star(rate) - e_sl(rate) * anchor) <= 1e-9,
             fmt::format("E_sl* != E_sl * E_LP1(C0) at R={}", rate));
  }
  return r;
}

SuiteResult delta_roundtrip() {
  SuiteResult r;
  const auto& c = bound_constants();
  for (int i = 0; i <= 100; ++i) {
    const double rate = c.zero_error_capacity + (c.r_star - c.zero_error_capacity) * i / 100.0;
    const double d = delta_of_R(rate);
    const double back = std::log2(5.0) - 2.0 * d - 0.5 * entropy2(2.0 * d);
    r.expect(std::fabs(back - rate) <= 1e-10, fmt::format("delta round trip at R={}: {}", rate, back - rate));
  }
  return r;
}

// ---- expurgated-analysis ---------------------------------------------------

SuiteResult psd_below_rho_bar() {
  SuiteResult r;
  const double rb = rho_bar();
  for (int i = 0; i <= 100; ++i) {
    const double rho = 1.0 + (rb - 1.0) * i / 100.0;
    for (double ev : circulant_eigenvalues(rho)) r.expect(ev >= -1e-12, fmt::format("negative eigenvalue at rho={}", rho));
  }
  const auto above = circulant_eigenvalues(rb + 0.05);
  r.expect(*std::min_element(above.begin(), above.end()) < 0.0, "matrix still PSD above rho_bar");
  return r;
}

SuiteResult exponent_continuity() {
  SuiteResult r;
  const double rb = rho_bar();
  const double first = -rb * std::log2((1.0 + std::exp2(1.0 - 1.0 / rb)) / 5.0);
  const double second = rb * std::log2(5.0) / 2.0;
  r.expect(std::fabs(first - second) <= 1e-9, fmt::format("branches differ by {}", first - second));
  return r;
}

std::vector<double> random_simplex_point(std::mt19937_64& rng, std::size_t size) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> p(size);
  double sum = 0.0;
  for (auto& v : p) sum += v = e(rng);
  for (auto& v : p) v /= sum;
  return p;
}

SuiteResult jelinek_factorization() {
  SuiteResult r;
  std::mt19937_64 rng(20240917);
  for (double rho : {1.0, 1.2, rho_bar()}) {
    const double single_min = q_form(rho, uniform_distribution(1));
    const double square = q_form(rho, uniform_distribution(2));
    r.expect(close_rel(square, single_min * single_min, 1e-12), "uniform P^2 does not attain the squared minimum");
    double sampled_min = square;
    for (int i = 0; i < 2000; ++i) {
      InputDistribution p{1, random_simplex_point(rng, 5)};
      const double q1 = q_form(rho, p);
      const double q2 = q_form(rho, product_distribution(p, p));
      r.expect(close_rel(q2, q1 * q1, 1e-12), "Q^2(P x P) != Q^1(P)^2");
      r.expect(q1 >= single_min - 1e-12, fmt::format("Q^1 below the uniform value at rho={}", rho));
      InputDistribution joint{2, random_simplex_point(rng, 25)};
      const double qj = q_form(rho, joint);
      r.expect(qj >= square - 1e-12, fmt::format("correlated P^2 beats the product minimum at rho={}", rho));
      sampled_min = std::min({sampled_min, q2, qj});
    }
    r.expect(std::fabs(sampled_min - square) <= 1e-6,
             fmt::format("sampled minimum {} differs from (min Q^1)^2 {}", sampled_min, square));
  }
  return r;
}

SuiteResult shannon_code_chain() {
  SuiteResult r;
  const Code code = shannon_code2();
  r.expect(code.size() == 5, "Shannon code does not have 5 words");
  std::vector<Rational> probs(25, Rational(0));
  for (const auto& w : code.words) probs[word_index(w, 5)] = Rational(1, 5);
  const auto coeff = q_form_coefficients(2, probs);
  r.expect(coeff[0] == Rational(1, 5) && coeff[1].numerator() == 0 && coeff[2].numerator() == 0, "Q^2 coefficients are not (1/5, 0, 0)");
  for (double rho : {rho_bar() + 0.01, 2.0, 3.0, 10.0}) {
    const double alpha = std::exp2(-1.0 / rho);
    double q2 = 0.0;
    for (std::size_t k = 0; k < coeff.size(); ++k) q2 += boost::rational_cast<double>(coeff[k]) * std::pow(alpha, k);
    r.expect(std::fabs(-(rho / 2.0) * std::log2(q2) - rho * std::log2(5.0) / 2.0) <= 1e-12,
             fmt::format("upper chain fails at rho={}", rho));
  }
  return r;
}

// ---- code-construction -----------------------------------------------------

Word direct_codeword_weight_input(const Word& u1, const Word& nu) {
  Word v(2 * u1.size());
  for (std::size_t i = 0; i < u1.size(); ++i) {
    v[i] = u1[i];
    v[u1.size() + i] = static_cast<Symbol>((2 * u1[i] + nu[i]) % 5);
  }
  return v;
}

SuiteResult structured_weight_equivalence() {
  SuiteResult r;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t size = checked_power(5, n, 1000);
    for (std::size_t a = 0; a < size; ++a) {
      const Word u1 = word_from_index(a, n, 5);
      for (std::size_t b = 0; b < size; ++b) {
        const Word nu = word_from_index(b, n, 5);
        r.expect(structured_weight(u1, nu) == typewriter_weight(direct_codeword_weight_input(u1, nu)),
                 fmt::format("mismatch n={} u1={} nu={}", n, a, b));
      }
    }
  }
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> sym(0, 4);
  std::uniform_int_distribution<int> small(0, 2);
  for (int i = 0; i < 100000; ++i) {
    const int n = 4 + i % 3;
    Word u1(n), nu(n);
    for (int k = 0; k < n; ++k) {
      // Bias u1 towards {0, +-1} so that finite weights are exercised too.
      u1[k] = static_cast<Symbol>(i % 2 ? sym(rng) : std::array<int, 3>{0, 1, 4}[small(rng)]);
      nu[k] = static_cast<Symbol>(sym(rng));
    }
    r.expect(structured_weight(u1, nu) == typewriter_weight(direct_codeword_weight_input(u1, nu)),
             "randomised structured weight mismatch");
  }
  return r;
}

SuiteResult zero_nu_words() {
  SuiteResult r;
  for (int n = 1; n <= 4; ++n) {
    const Word nu(n, 0);
    for (std::size_t a = 0; a < checked_power(5, n, 1000); ++a) {
      const auto w = structured_weight(word_from_index(a, n, 5), nu);
      r.expect(w == ExtendedWeight(0) || w.is_infinite(), "nu = 0 word with finite positive weight");
    }
  }
  return r;
}

SuiteResult binomial_weight_counts() {
  SuiteResult r;
  for (int n = 1; n <= 3; ++n) {
    for (std::size_t b = 0; b < checked_power(5, n, 1000); ++b) {
      const Word nu = word_from_index(b, n, 5);
      int d = 0;
      for (Symbol s : nu) d += s != 0;
      std::vector<int> count(2 * n + 1, 0);
      std::size_t patterns = 1;
      for (int k = 0; k < n; ++k) patterns *= 3;
      for (std::size_t p = 0; p < patterns; ++p) {
        Word u1(n);
        std::size_t rest = p;
        for (int k = 0; k < n; ++k) {
          u1[k] = std::array<Symbol, 3>{0, 1, 4}[rest % 3];
          rest /= 3;
        }
        const auto w = structured_weight(u1, nu);
        if (w.is_finite()) ++count[w.value()];
      }
      for (int t = 0; t <= d; ++t) {
        r.expect(count[d + t] == static_cast<int>(std::lround(std::exp2(log_binomial(d, t)))),
                 fmt::format("n={} nu={} t={}: {} words", n, b, t, count[d + t]));
      }
      int finite = 0;
      for (int c : count) finite += c;
      r.expect(finite == (1 << d), "finite-weight u1 count is not 2^d");
    }
  }
  return r;
}

SuiteResult union_bound_properties() {
  SuiteResult r;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Z5Matrix g = sample_random_G(4, 2, seed);
    const GeneratorPlus gp(4, 2, g);
    const Spectrum a = enumerate_spectrum(gp);
    r.expect(a.total() == checked_power(5, 6, 100000), "spectrum does not partition the messages");
    r.expect(close_rel(union_bound_pe(a), structured_union_bound(hamming_spectrum(g)), 1e-12),
             fmt::format("union bound routes disagree for seed {}", seed));
    Spectrum bigger = a;
    bigger.add(ExtendedWeight(3));
    bigger.add(ExtendedWeight::infinity());
    r.expect(union_bound_pe(bigger) >= union_bound_pe(a), "union bound decreased after adding codewords");
  }
  return r;
}

// ---- lp-certificate --------------------------------------------------------

SuiteResult plancherel_identity() {
  SuiteResult r;
  std::mt19937_64 rng(314159);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution member(0.3);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      GroupFunction f(n, 5);
      for (auto& v : f.values()) v = {normal(rng), normal(rng)};
      Code code{5, {}};
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (member(rng)) code.words.push_back(word_from_index(i, n, 5));
      }
      if (code.words.empty()) code.words.push_back(Word(n, 0));
      const GroupFunction one_c = indicator(code);
      const auto lhs = inner_product(convolve(f, one_c), one_c);
      const GroupFunction chat = dft(one_c);
      const auto rhs = inner_product(pointwise_product(dft(f), chat), chat) / static_cast<double>(f.size());
      r.expect(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)),
               fmt::format("Plancherel n={}: ({}, {}) vs ({}, {})", n, lhs.real(), lhs.imag(), rhs.real(),
                           rhs.imag()));
    }
  }
  return r;
}

SuiteResult lovasz_transform_vanishing() {
  SuiteResult r;
  for (int n = 1; n <= 3; ++n) {
    const GroupFunction ghat = dft(lovasz_assignment(n, 5));
    for (int ell = 1; ell <= n; ++ell) {
      const SphereSpec sphere{n, 5, SphereKind::kFrequency, ell};
      for (std::size_t i = 0; i < ghat.size(); ++i) {
        if (in_sphere(sphere, word_from_index(i, n, 5))) {
          r.expect(std::abs(ghat[i]) <= 1e-12, fmt::format("g^ nonzero on S_{}^c, n={}", ell, n));
        }
      }
    }
    for (const auto& v : ghat.values()) r.expect(v.real() >= -1e-12, "g^ negative");
  }
  return r;
}

SuiteResult composite_transform_at_zero() {
  SuiteResult r;
  const double qp = krawtchouk_parameter(5);
  for (int n = 1; n <= 3; ++n) {
    const GroupFunction ghat = dft(lovasz_assignment(n, 5));
    for (int d = 1; d <= n; ++d) {
      const LPSolution s = lp_solve_lambda(n, d, qp);
      const GroupFunction f = composite_function(5, s);
      const double qn = static_cast<double>(f.size());
      const double expected = ghat[0].real() * (qn * s.lambda[0]) / qn;
      const auto fhat = dft(f);
      r.expect(close_rel(fhat[0].real(), expected, 1e-9), fmt::format("f^(0) mismatch n={} d={}", n, d));
      const auto report = verify_certificate(f, ExtendedWeight(d));
      r.expect(report.pass, fmt::format("composite certificate fails n={} d={}", n, d));
      r.expect(close_rel(report.bound, composite_bound(n, ExtendedWeight(d)), 1e-9),
               fmt::format("certificate bound {} differs from composite_bound n={} d={}", report.bound, n, d));
    }
  }
  return r;
}

SuiteResult composite_dominates_max_code() {
  SuiteResult r;
  for (int n = 1; n <= 3; ++n) {
    std::vector<ExtendedWeight> ds;
    for (int d = 1; d <= 2 * n; ++d) ds.emplace_back(d);
    ds.push_back(ExtendedWeight::infinity());
    for (const auto d : ds) {
      const double bound = composite_bound(n, d);
      const auto best = brute_force_max_code(n, d);
      r.expect(bound + 1e-9 >= static_cast<double>(best.size),
               fmt::format("n={} d={}: bound {} < max code {}", n, d.to_string(), bound, best.size));
    }
  }
  return r;
}

SuiteResult lp_single_letter() {
  SuiteResult r;
  const LPSolution s = lp_solve_lambda(1, 1, std::sqrt(5.0));
  r.expect(s.status == LpStatus::kOptimal, "LP not optimal");
  r.expect(std::fabs(s.objective - std::sqrt(5.0)) <= 1e-9, fmt::format("objective {}", s.objective));
  return r;
}

SuiteResult sphere_krawtchouk_identity() {
  SuiteResult r;
  for (int n = 1; n <= 6; ++n) {
    for (int u = 0; u <= n; ++u) {
      Word x(n, 0);
      for (int i = 0; i < u; ++i) x[i] = i % 2 ? 4 : 1;
      for (int ell = 0; ell <= n; ++ell) {
        const auto t = sphere_transform({n, 5, SphereKind::kFrequency, ell}, x);
        r.expect(std::fabs(t.direct - t.closed_form) <= 1e-9,
                 fmt::format("n={} l={} u={}: {} vs {}", n, ell, u, t.direct, t.closed_form));
      }
    }
  }
  return r;
}

// ---- channel-lab -----------------------------------------------------------

SuiteResult channel_support() {
  SuiteResult r;
  constexpr std::uint64_t kDraws = 1'000'000;
  for (Symbol s = 0; s < 5; ++s) {
    std::uint64_t shifted = 0;
    for (std::uint64_t i = 0; i < kDraws; ++i) {
      StreamRng rng(11 + s, i);
      const Symbol y = channel_sample(Word{s}, rng)[0];
      const int diff = (y - s + 5) % 5;
      r.expect(diff == 0 || diff == 1, "output outside {x, x+1}");
      shifted += diff == 1;
    }
    const double sigma = std::sqrt(0.25 / kDraws);
    r.expect(std::fabs(static_cast<double>(shifted) / kDraws - 0.5) <= 5.0 * sigma,
             fmt::format("symbol {} shift frequency {}", s, static_cast<double>(shifted) / kDraws));
  }
  return r;
}

SuiteResult confusion_frequency() {
  SuiteResult r;
  const std::vector<std::pair<Word, Word>> pairs = {
      {{0}, {1}}, {{0, 0}, {1, 4}}, {{0, 2, 3}, {4, 3, 2}}, {{1, 1, 1, 1}, {2, 0, 1, 2}}};
  constexpr std::uint64_t kTrials = 1'000'000;
  std::uint64_t seed = 5;
  for (const auto& [x, y] : pairs) {
    const double p = pairwise_confusion_prob(x, y);
    const SimResult sim = simulate_confusion(x, y, kTrials, seed++);
    const double sigma = std::sqrt(p * (1.0 - p) / kTrials);
    r.expect(std::fabs(sim.estimate - p) <= 5.0 * sigma,
             fmt::format("confusion frequency {} vs {}", sim.estimate, p));
  }
  return r;
}

SuiteResult nested_codes() {
  SuiteResult r;
  Code small = shannon_code2();
  small.words.push_back({1, 1});
  Code large = small;
  large.words.push_back({3, 0});
  large.words.push_back({2, 4});
  constexpr std::uint64_t kTrials = 200'000;
  const SimResult a = monte_carlo_pe(small, kTrials, 99);
  const SimResult b = monte_carlo_pe(large, kTrials, 99);
  r.expect(a.estimate <= b.estimate + a.ci95_halfwidth + b.ci95_halfwidth,
           fmt::format("P_e decreased from {} to {} after adding codewords", a.estimate, b.estimate));
  const SimResult zero = monte_carlo_pe(shannon_code2(), kTrials, 99);
  r.expect(zero.errors == 0, "zero-error code made errors");
  return r;
}

std::vector<Suite> build_registry() {
  return {
      {"scalar-math", "entropy-shape", "H_q concave with maximum log q at (q-1)/q", entropy_shape},
      {"scalar-math", "krawtchouk-orthogonality", "discrete orthogonality for n <= 8", krawtchouk_orthogonality},
      {"scalar-math", "krawtchouk-recurrence", "explicit sum matches three-term recurrence", krawtchouk_recurrence},
      {"scalar-math", "bisect-determinism", "bisect is reproducible", bisect_determinism},
      {"bound-curves", "curves-monotone", "all five curves non-increasing on (C0, C)", curves_monotone},
      {"bound-curves", "gv-above-rex", "E_GV* >= E_r/ex, strictly at C0", gv_above_rex},
      {"bound-curves", "sl-star-product", "E_sl* = E_sl * E_LP1(C0)", sl_star_product},
      {"bound-curves", "delta-roundtrip", "delta(R) solves its defining equation", delta_roundtrip},
      {"expurgated-analysis", "psd-below-rho-bar", "g1 PSD exactly up to rho_bar", psd_below_rho_bar},
      {"expurgated-analysis", "exponent-continuity", "E_x^inf branches meet at rho_bar", exponent_continuity},
      {"expurgated-analysis", "jelinek-factorization", "product and uniform minimisers of Q^2", jelinek_factorization},
      {"expurgated-analysis", "shannon-code-chain", "Q^2 of the Shannon code is exactly 1/5", shannon_code_chain},
      {"code-construction", "structured-weight", "case analysis matches direct weights", structured_weight_equivalence},
      {"code-construction", "zero-nu-words", "nu = 0 words have weight 0 or infinity", zero_nu_words},
      {"code-construction", "binomial-counts", "C(d,t) words of weight d+t per nu", binomial_weight_counts},
      {"code-construction", "union-bound", "union bound routes agree and are monotone", union_bound_properties},
      {"lp-certificate", "plancherel", "Plancherel identity on Z_5^n", plancherel_identity},
      {"lp-certificate", "lovasz-vanishing", "g^ vanishes on frequency spheres", lovasz_transform_vanishing},
      {"lp-certificate", "composite-zero-frequency", "f^(0) = q^-n g^(0) h_0", composite_transform_at_zero},
      {"lp-certificate", "composite-vs-max-code", "composite bound >= exact max code", composite_dominates_max_code},
      {"lp-certificate", "lp-single-letter", "n=1, d=1 LP optimum is sqrt 5", lp_single_letter},
      {"lp-certificate", "sphere-krawtchouk", "sphere transform equals Krawtchouk closed form", sphere_krawtchouk_identity},
      {"channel-lab", "channel-support", "outputs in {x, x+1} with fair frequencies", channel_support},
      {"channel-lab", "confusion-frequency", "simulated confusion matches 2^-d_H", confusion_frequency},
      {"channel-lab", "nested-codes", "adding codewords does not lower P_e", nested_codes},
  };
}

}  // namespace

const std::vector<Suite>& suite_registry() {
  static const std::vector<Suite> registry = build_registry();
  return registry;
}

SuiteResult run_suite(const std::string& name) {
  for (const auto& suite : suite_registry()) {
    if (suite.name == name) return suite.run();
  }
  throw std::out_of_range(fmt::format("unknown suite '{}'", name));
}

}  // namespace typewriter
