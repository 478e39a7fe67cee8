#include "typewriter/construction.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/core.h>

#include "typewriter/scalar_math.hpp"

namespace typewriter {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// Contribution of coordinate i to w((u1, 2 u1 + nu)) indexed [nu][u1].
// For nu = 0 only u1 = 0 is finite; for nu != 0 the values {0, +1, -1}
// of u1 give one 1, one 2 and one infinity; u1 = +-2 is always infinite.
constexpr std::uint32_t kContribution[5][5] = {
    {0, kInf, kInf, kInf, kInf},
    {1, kInf, kInf, kInf, 2},
    {kInf, 2, kInf, kInf, 1},
    {kInf, 1, kInf, kInf, 2},
    {1, 2, kInf, kInf, kInf},
};

void check_z5(const Word& w, const char* what) {
  for (Symbol s : w) {
    if (s >= 5) throw std::invalid_argument(fmt::format("{}: symbol {} not in Z_5", what, s));
  }
}

}  // namespace

std::string ExtendedWeight::to_string() const {
  return is_infinite() ? "inf" : std::to_string(value_);
}

ExtendedWeight ExtendedWeight::parse(const std::string& text) {
  if (text == "inf") return infinity();
  if (text.empty() || text[0] < '0' || text[0] > '9') throw std::invalid_argument(fmt::format("not a weight: '{}'", text));
  std::size_t used = 0;
  long v = -1;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 0 || v >= static_cast<long>(kInf)) {
    throw std::invalid_argument(fmt::format("not a weight: '{}'", text));
  }
  return ExtendedWeight(static_cast<std::uint32_t>(v));
}

ExtendedWeight symbol_distance(Symbol a, Symbol b) {
  const int d = ((a - b) % 5 + 5) % 5;
  if (d == 0) return ExtendedWeight(0);
  if (d == 1 || d == 4) return ExtendedWeight(1);
  return ExtendedWeight::infinity();
}

ExtendedWeight seq_distance(const Word& x, const Word& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(
        fmt::format("seq_distance: length mismatch {} vs {}", x.size(), y.size()));
  }
  ExtendedWeight total(0);
  for (std::size_t i = 0; i < x.size() && total.is_finite(); ++i) {
    total += symbol_distance(x[i], y[i]);
  }
  return total;
}

ExtendedWeight typewriter_weight(const Word& x) { return seq_distance(x, Word(x.size(), 0)); }

Word Z5Matrix::left_multiply(const Word& u) const {
  if (static_cast<int>(u.size()) != rows_) {
    throw std::invalid_argument("left_multiply: message length does not match rows");
  }
  Word out(cols_, 0);
  for (int c = 0; c < cols_; ++c) {
    int acc = 0;
    for (int r = 0; r < rows_; ++r) acc += u[r] * at(r, c);
    out[c] = static_cast<Symbol>(acc % 5);
  }
  return out;
}

GeneratorPlus::GeneratorPlus(int n_, int k_, Z5Matrix g_) : n(n_), k(k_), g(std::move(g_)) {
  if (n < 1 || k < 0) throw std::invalid_argument("GeneratorPlus: need n >= 1, k >= 0");
  if (k > 0 && (g.rows() != k || g.cols() != n)) {
    throw std::invalid_argument(
        fmt::format("GeneratorPlus: G is {}x{}, expected {}x{}", g.rows(), g.cols(), k, n));
  }
  if (k == 0) g = Z5Matrix(0, n);
}

Z5Matrix GeneratorPlus::assembled() const {
  Z5Matrix m(n + k, 2 * n);
  for (int i = 0; i < n; ++i) {
    m.at(i, i) = 1;
    m.at(i, n + i) = 2;
  }
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < n; ++c) m.at(n + r, n + c) = g.at(r, c);
  }
  return m;
}

ExtendedWeight structured_weight(const Word& u1, const Word& nu) {
  if (u1.size() != nu.size()) throw std::invalid_argument("structured_weight: length mismatch");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < u1.size(); ++i) {
    const std::uint32_t c = kContribution[nu[i] % 5][u1[i] % 5];
    if (c == kInf) return ExtendedWeight::infinity();
    total += c;
  }
  return ExtendedWeight(static_cast<std::uint32_t>(total));
}

void Spectrum::add(ExtendedWeight w, std::uint64_t count) {
  if (w.is_infinite()) {
    infinite_count += count;
  } else {
    counts[w.value()] += count;
  }
}

std::uint64_t Spectrum::total() const {
  std::uint64_t t = infinite_count;
  for (const auto& [w, c] : counts) t += c;
  return t;
}

std::uint64_t Spectrum::count(std::uint32_t weight) const {
  const auto it = counts.find(weight);
  return it == counts.end() ? 0 : it->second;
}

Spectrum enumerate_spectrum(const GeneratorPlus& gp) {
  const std::size_t messages = checked_power(5, gp.n + gp.k, kEnumerationLimit);
  if (messages == 0) {
    throw std::length_error(fmt::format("enumerate_spectrum: 5^{} exceeds the limit of {}",
                                        gp.n + gp.k, kEnumerationLimit));
  }
  const std::size_t first = checked_power(5, gp.n, kEnumerationLimit);
  const std::size_t second = checked_power(5, gp.k, kEnumerationLimit);

  Spectrum spectrum;
  Word u1(gp.n, 0);
  for (std::size_t m2 = 0; m2 < second; ++m2) {
    const Word nu = gp.k == 0 ? Word(gp.n, 0)
                              : gp.g.left_multiply(word_from_index(m2, gp.k, 5));
    std::fill(u1.begin(), u1.end(), 0);
    for (std::size_t m1 = 0; m1 < first; ++m1) {
      spectrum.add(structured_weight(u1, nu));
      for (int i = gp.n - 1; i >= 0; --i) {
        if (++u1[i] < 5) break;
        u1[i] = 0;
      }
    }
  }
  return spectrum;
}

Spectrum hamming_spectrum(const Z5Matrix& g) {
  const std::size_t messages = checked_power(5, g.rows(), kEnumerationLimit);
  if (messages == 0) {
    throw std::length_error(
        fmt::format("hamming_spectrum: 5^{} exceeds the limit of {}", g.rows(), kEnumerationLimit));
  }
  Spectrum spectrum;
  for (std::size_t m = 0; m < messages; ++m) {
    const Word nu = g.left_multiply(word_from_index(m, g.rows(), 5));
    std::uint32_t weight = 0;
    for (Symbol s : nu) weight += s != 0;
    spectrum.add(ExtendedWeight(weight));
  }
  return spectrum;
}

Spectrum codeword_spectrum(const Code& code) {
  Spectrum spectrum;
  for (const auto& w : code.words) {
    check_z5(w, "codeword_spectrum");
    spectrum.add(typewriter_weight(w));
  }
  return spectrum;
}

double union_bound_pe(const Spectrum& spectrum) {
  double total = 0.0;
  for (const auto& [z, count] : spectrum.counts) {
    if (z >= 1) total += static_cast<double>(count) * std::exp2(-static_cast<double>(z));
  }
  return total;
}

double structured_union_bound(const Spectrum& hamming) {
  double total = 0.0;
  for (const auto& [d, count] : hamming.counts) {
    if (d == 0) continue;
    for (std::uint32_t t = 0; t <= d; ++t) {
      total += static_cast<double>(count) * std::exp2(log_binomial(d, t) - d - t);
    }
  }
  return total;
}

double gv_delta(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::domain_error(fmt::format("gv_delta: r = {} outside [0,1)", r));
  const double log5 = std::log2(5.0);
  auto f = [r, log5](double d) { return log5 - entropy2(d) - 2.0 * d - r * log5; };
  constexpr double hi = 0.8;
  if (f(hi) >= 0.0) return hi;
  return bisect(f, 0.0, hi);
}

ExponentChoice exponent_optimizer(double r) {
  const double log5 = std::log2(5.0);
  const double delta_gv = gv_delta(r);
  ExponentChoice choice{};
  choice.tau_star = 1.0 / 3.0;
  if (delta_gv <= 0.75) {
    choice.delta_star = 0.75;
    choice.exponent_per_symbol = -(log5 * (r - 1.0) + 2.0);
  } else {
    choice.delta_star = delta_gv;
    choice.exponent_per_symbol = delta_gv * (4.0 / 3.0 - entropy2(1.0 / 3.0));
  }
  choice.rate = log5 * (1.0 + r) / 2.0;
  choice.exponent_per_channel_use = choice.exponent_per_symbol / 2.0;
  return choice;
}

double gv_log_spectrum(int n, double r, double delta) {
  if (n < 1) throw std::domain_error("gv_log_spectrum: n must be positive");
  if (!(delta >= 0.0 && delta <= 1.0)) throw std::domain_error("gv_log_spectrum: delta outside [0,1]");
  if (delta < gv_delta(r)) return -std::numeric_limits<double>::infinity();
  const long d = std::lround(delta * n);
  return (r - 1.0) * std::log2(5.0) + log_binomial(n, d) / n + 2.0 * delta;
}

Z5Matrix sample_random_G(int n, int k, std::uint64_t seed) {
  if (n < 1 || k < 1) throw std::domain_error("sample_random_G: need n, k >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> symbol(0, 4);
  Z5Matrix g(k, n);
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < n; ++c) g.at(r, c) = static_cast<Symbol>(symbol(rng));
  }
  return g;
}

}  // namespace typewriter
