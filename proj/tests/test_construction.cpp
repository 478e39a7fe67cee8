#include <doctest.h>

#include <cmath>
#include <map>
#include <stdexcept>

#include "typewriter/construction.hpp"
#include "typewriter/scalar_math.hpp"

using namespace typewriter;

namespace {

constexpr ExtendedWeight kInf = ExtendedWeight::infinity();

ExtendedWeight w(std::uint32_t v) { return ExtendedWeight(v); }

Z5Matrix matrix(int rows, int cols, std::initializer_list<int> entries) {
  Z5Matrix m(rows, cols);
  int i = 0;
  for (int e : entries) {
    m.at(i / cols, i % cols) = static_cast<Symbol>(e);
    ++i;
  }
  return m;
}

// Materialise every codeword u G+ and weigh it directly.
Spectrum direct_spectrum(const GeneratorPlus& gp) {
  const Z5Matrix full = gp.assembled();
  Spectrum s;
  const std::size_t messages = checked_power(5, gp.n + gp.k, kEnumerationLimit);
  for (std::size_t m = 0; m < messages; ++m) s.add(typewriter_weight(full.left_multiply(word_from_index(m, gp.n + gp.k, 5))));
  return s;
}

// Hamming weights of u2 G by a separate loop.
std::map<int, std::uint64_t> direct_hamming(const Z5Matrix& g) {
  std::map<int, std::uint64_t> counts;
  const std::size_t messages = checked_power(5, g.rows(), kEnumerationLimit);
  for (std::size_t m = 0; m < messages; ++m) {
    const Word u = word_from_index(m, g.rows(), 5);
    int weight = 0;
    for (int c = 0; c < g.cols(); ++c) {
      int s = 0;
      for (int r = 0; r < g.rows(); ++r) s += u[r] * g.at(r, c);
      weight += s % 5 != 0;
    }
    ++counts[weight];
  }
  return counts;
}

}  // namespace

TEST_CASE("ExtendedWeight arithmetic and parsing") {
  CHECK(w(2) + w(3) == w(5));
  CHECK((w(2) + kInf).is_infinite());
  CHECK((kInf + kInf).is_infinite());
  CHECK(w(7) < kInf);
  CHECK(w(0) < w(1));
  ExtendedWeight acc(1);
  acc += w(4);
  CHECK(acc == w(5));
  CHECK(ExtendedWeight::parse("inf").is_infinite());
  CHECK(ExtendedWeight::parse("12") == w(12));
  CHECK(ExtendedWeight::parse("0") == w(0));
  CHECK(kInf.to_string() == "inf");
  CHECK(w(9).to_string() == "9");
  for (const char* bad : {"", "-1", "1.5", "infinity", "3x", " 3"}) CHECK_THROWS_AS(ExtendedWeight::parse(bad), std::invalid_argument);
}

TEST_CASE("symbol and sequence distances") {
  CHECK(symbol_distance(0, 0) == w(0));
  CHECK(symbol_distance(2, 3) == w(1));
  CHECK(symbol_distance(3, 2) == w(1));
  CHECK(symbol_distance(0, 4) == w(1));
  CHECK(symbol_distance(0, 2).is_infinite());
  CHECK(symbol_distance(1, 4).is_infinite());
  CHECK(seq_distance({0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}) == w(0));
  CHECK(seq_distance({0, 1}, {1, 2}) == w(2));
  CHECK(seq_distance({0, 1, 1, 1}, {2, 1, 1, 1}).is_infinite());
  CHECK(seq_distance({0, 1, 1, 1}, {2, 0, 0, 0}).is_infinite());
  CHECK_THROWS_AS(seq_distance({0, 1}, {0}), std::invalid_argument);
  CHECK(typewriter_weight({1, 4, 0}) == w(2));
  CHECK(typewriter_weight({3}).is_infinite());
}

TEST_CASE("G+ assembly") {
  const GeneratorPlus gp(2, 1, matrix(1, 2, {1, 2}));
  const Z5Matrix full = gp.assembled();
  REQUIRE(full.rows() == 3);
  REQUIRE(full.cols() == 4);
  const Z5Matrix expected = matrix(3, 4, {1, 0, 2, 0, 0, 1, 0, 2, 0, 0, 1, 2});
  CHECK(full == expected);
  CHECK(full.left_multiply({1, 1, 1}) == Word{1, 1, 3, 4});
  CHECK_THROWS_AS(full.left_multiply({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorPlus(2, 1, matrix(1, 3, {1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(GeneratorPlus(0, 1, Z5Matrix(1, 0)), std::invalid_argument);
}

TEST_CASE("structured_weight case rules") {
  CHECK(structured_weight({0, 0, 0}, {0, 0, 0}) == w(0));
  CHECK(structured_weight({2, 0}, {0, 0}).is_infinite());
  CHECK(structured_weight({3, 0}, {1, 0}).is_infinite());
  CHECK(structured_weight({0, 1}, {0, 0}).is_infinite());
  // nonzero nu: the three admissible u1 values give 1, 2 and infinity in some order
  for (int nu = 1; nu < 5; ++nu) {
    std::map<std::string, int> seen;
    for (int u : {0, 1, 4}) ++seen[structured_weight({static_cast<Symbol>(u)}, {static_cast<Symbol>(nu)}).to_string()];
    CHECK(seen["1"] == 1);
    CHECK(seen["2"] == 1);
    CHECK(seen["inf"] == 1);
  }
  CHECK_THROWS_AS(structured_weight({0, 0}, {0}), std::invalid_argument);
}

TEST_CASE("structured_weight equals the direct weight of (u1, 2 u1 + nu)") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t size = checked_power(5, n, 1000);
    int mismatches = 0;
    for (std::size_t a = 0; a < size; ++a) {
      const Word u1 = word_from_index(a, n, 5);
      for (std::size_t b = 0; b < size; ++b) {
        const Word nu = word_from_index(b, n, 5);
        Word v(u1);
        for (int i = 0; i < n; ++i) v.push_back(static_cast<Symbol>((2 * u1[i] + nu[i]) % 5));
        mismatches += structured_weight(u1, nu) != seq_distance(v, Word(2 * n, 0));
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("enumerate_spectrum examples") {
  const Spectrum s = enumerate_spectrum(GeneratorPlus(1, 0, Z5Matrix(0, 1)));
  CHECK(s.count(0) == 1);
  CHECK(s.counts.size() == 1);
  CHECK(s.infinite_count == 4);
  CHECK(s.total() == 5);

  const GeneratorPlus example(2, 1, matrix(1, 2, {1, 2}));
  const Spectrum e = enumerate_spectrum(example);
  CHECK(e == direct_spectrum(example));
  CHECK(e.total() == 125);
  CHECK(e.count(0) == 1);

  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const GeneratorPlus gp(3, 2, sample_random_G(3, 2, seed));
    CHECK(enumerate_spectrum(gp) == direct_spectrum(gp));
  }
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_spectrum(GeneratorPlus(6, 5, Z5Matrix(5, 6))), std::length_error);
  CHECK_THROWS_AS(hamming_spectrum(Z5Matrix(11, 2)), std::length_error);
  CHECK_NOTHROW(hamming_spectrum(Z5Matrix(10, 1)));
}

TEST_CASE("hamming_spectrum") {
  const Spectrum id = hamming_spectrum(matrix(2, 2, {1, 0, 0, 1}));
  CHECK(id.count(0) == 1);
  CHECK(id.count(1) == 8);
  CHECK(id.count(2) == 16);
  CHECK(id.infinite_count == 0);

  const Spectrum zero = hamming_spectrum(Z5Matrix(3, 4));
  CHECK(zero.count(0) == 125);
  CHECK(zero.total() == 125);

  const Z5Matrix g = sample_random_G(4, 2, 7);
  const Spectrum s = hamming_spectrum(g);
  const auto direct = direct_hamming(g);
  CHECK(s.total() == 25);
  for (const auto& [weight, count] : direct) CHECK(s.count(weight) == count);
  CHECK(s.counts.size() == direct.size());
}

TEST_CASE("union bounds") {
  Spectrum zero_error;
  zero_error.add(w(0));
  zero_error.add(kInf, 24);
  CHECK(union_bound_pe(zero_error) == 0.0);
  Spectrum s;
  s.add(w(0));
  s.add(w(3), 4);
  CHECK(union_bound_pe(s) == 0.5);
  Spectrum more = s;
  more.add(w(5));
  CHECK(union_bound_pe(more) > union_bound_pe(s));

  // the B_d form equals the A_z form of the G+ code
  for (std::uint64_t seed : {4u, 5u}) {
    const Z5Matrix g = sample_random_G(3, 2, seed);
    const double via_a = union_bound_pe(enumerate_spectrum(GeneratorPlus(3, 2, g)));
    const double via_b = structured_union_bound(hamming_spectrum(g));
    CHECK(via_a == doctest::Approx(via_b).epsilon(1e-12));
  }
}

TEST_CASE("codeword_spectrum") {
  Code c{5, {{0, 0}, {1, 4}, {2, 0}}};
  const Spectrum s = codeword_spectrum(c);
  CHECK(s.count(0) == 1);
  CHECK(s.count(2) == 1);
  CHECK(s.infinite_count == 1);
  Code bad{5, {{7}}};
  CHECK_THROWS_AS(codeword_spectrum(bad), std::invalid_argument);
}

TEST_CASE("gv_delta") {
  // tangent root: bisection only resolves it to about sqrt(eps)
  CHECK(std::fabs(gv_delta(0.0) - 0.8) <= 1e-6);
  CHECK(entropy2(0.8) + 1.6 == doctest::Approx(std::log2(5.0)).epsilon(1e-12));
  double prev = 1.0;
  for (double r = 0.0; r < 0.99; r += 0.05) {
    const double d = gv_delta(r);
    CHECK(d < prev);
    CHECK(std::log2(5.0) - entropy2(d) - 2 * d == doctest::Approx(r * std::log2(5.0)).epsilon(1e-10));
    prev = d;
  }
  const double log5 = std::log2(5.0);
  const double r34 = (log5 - entropy2(0.75) - 1.5) / log5;
  CHECK(gv_delta(r34) == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(r34 == doctest::Approx(0.0045867).epsilon(1e-4));
  CHECK(log5 * (1 + r34) / 2 == doctest::Approx(log5 - 0.5 * entropy2(0.25) - 0.75).epsilon(1e-12));
  CHECK_THROWS_AS(gv_delta(-0.1), std::domain_error);
  CHECK_THROWS_AS(gv_delta(1.0), std::domain_error);
}

TEST_CASE("exponent_optimizer") {
  const double log5 = std::log2(5.0);
  const double r34 = (log5 - entropy2(0.75) - 1.5) / log5;
  for (double r : {0.0, 0.001, r34, 0.1, 0.5}) CHECK(exponent_optimizer(r).tau_star == doctest::Approx(1.0 / 3.0));
  const double below = exponent_optimizer(r34 - 1e-9).exponent_per_symbol;
  const double above = exponent_optimizer(r34 + 1e-9).exponent_per_symbol;
  CHECK(std::fabs(below - above) <= 1e-8);
  CHECK(0.75 * (4.0 / 3.0 - entropy2(1.0 / 3.0)) == doctest::Approx(-(log5 * (r34 - 1.0) + 2.0)).epsilon(1e-12));
  const ExponentChoice at = exponent_optimizer(r34);
  CHECK(at.exponent_per_channel_use == doctest::Approx(0.1556390622).epsilon(1e-8));
  CHECK(at.rate == doctest::Approx(log5 - 0.5 * entropy2(0.25) - 0.75).epsilon(1e-12));
  CHECK(exponent_optimizer(0.0).delta_star == doctest::Approx(0.8));
  CHECK(exponent_optimizer(0.3).delta_star == 0.75);
}

TEST_CASE("gv_log_spectrum") {
  const double r = 0.3;
  CHECK(std::isinf(gv_log_spectrum(100, r, gv_delta(r) - 0.05)));
  // exponent crosses zero at the GV distance as n grows
  const double d = gv_delta(r);
  CHECK(std::fabs(gv_log_spectrum(4000, r, d + 1e-3)) < 0.01);
  CHECK(gv_log_spectrum(4000, r, 0.7) > 0.0);
  CHECK_THROWS_AS(gv_log_spectrum(0, r, 0.5), std::domain_error);
}

TEST_CASE("sample_random_G") {
  CHECK(sample_random_G(4, 3, 42) == sample_random_G(4, 3, 42));
  CHECK_FALSE(sample_random_G(4, 3, 42) == sample_random_G(4, 3, 43));
  CHECK_THROWS_AS(sample_random_G(0, 1, 1), std::domain_error);
  CHECK_THROWS_AS(sample_random_G(1, 0, 1), std::domain_error);
  // chi-square on 10^5 entries, 4 degrees of freedom
  const Z5Matrix g = sample_random_G(1000, 100, 2024);
  std::array<double, 5> counts{};
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) counts[g.at(r, c)] += 1;
  }
  double chi2 = 0;
  for (double c : counts) {
    chi2 += (c - 2e4) * (c - 2e4) / 2e4;
    CHECK(std::fabs(c - 2e4) <= 5 * std::sqrt(1e5 * 0.2 * 0.8));
  }
  CHECK(chi2 < 18.47);  // 0.999 quantile of chi-square with 4 dof
}
