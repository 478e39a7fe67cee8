#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <string>

#include "typewriter/words.hpp"

namespace typewriter {

// Nonnegative integer or infinity; addition saturates at infinity.
class ExtendedWeight {
 public:
  constexpr ExtendedWeight() = default;
  constexpr explicit ExtendedWeight(std::uint32_t v) : value_(v) {}

  static constexpr ExtendedWeight infinity() { return ExtendedWeight(kInf); }

  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_finite() const { return value_ != kInf; }
  // Only meaningful when finite.
  constexpr std::uint32_t value() const { return value_; }

  constexpr ExtendedWeight operator+(ExtendedWeight o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return ExtendedWeight(value_ + o.value_);
  }
  constexpr ExtendedWeight& operator+=(ExtendedWeight o) { return *this = *this + o; }
  constexpr auto operator<=>(const ExtendedWeight&) const = default;

  std::string to_string() const;
  // Accepts a nonnegative integer or the literal "inf".
  static ExtendedWeight parse(const std::string& text);

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t value_ = 0;
};

// Typewriter distance on Z_5: 0 if equal, 1 if a - b = +-1, infinite otherwise.
ExtendedWeight symbol_distance(Symbol a, Symbol b);
ExtendedWeight seq_distance(const Word& x, const Word& y);
ExtendedWeight typewriter_weight(const Word& x);

// Row-major matrix over Z_5.
class Z5Matrix {
 public:
  Z5Matrix() = default;
  Z5Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Symbol& at(int r, int c) { return data_[r * cols_ + c]; }
  Symbol at(int r, int c) const { return data_[r * cols_ + c]; }
  bool operator==(const Z5Matrix&) const = default;

  // Row vector times matrix, mod 5.
  Word left_multiply(const Word& u) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Symbol> data_;
};

// G+ = [[I_n, 2 I_n], [0, G]] for a k x n matrix G.
struct GeneratorPlus {
  int n = 0;
  int k = 0;
  Z5Matrix g;

  GeneratorPlus(int n, int k, Z5Matrix g);
  Z5Matrix assembled() const;
};

// Weight of v = (u1, 2 u1 + nu) from the per-coordinate case rules.
ExtendedWeight structured_weight(const Word& u1, const Word& nu);

struct Spectrum {
  std::map<std::uint32_t, std::uint64_t> counts;
  std::uint64_t infinite_count = 0;

  void add(ExtendedWeight w, std::uint64_t count = 1);
  std::uint64_t total() const;
  std::uint64_t count(std::uint32_t weight) const;
  bool operator==(const Spectrum&) const = default;
};

inline constexpr std::size_t kEnumerationLimit = 10'000'000;

// Exact typewriter-weight spectrum of the code generated by G+, one entry per
// message u = (u1, u2).
Spectrum enumerate_spectrum(const GeneratorPlus& gp);

// Hamming-weight spectrum B_d of {u2 G}, one entry per message u2.
Spectrum hamming_spectrum(const Z5Matrix& g);

// Typewriter-weight spectrum of an explicit list of codewords.
Spectrum codeword_spectrum(const Code& code);

// sum_{z >= 1 finite} A_z 2^{-z}.
double union_bound_pe(const Spectrum& spectrum);

// Same bound expressed through B_d: sum_{d>=1} sum_{t=0..d} B_d C(d,t) 2^{-(d+t)}.
double structured_union_bound(const Spectrum& hamming);

// Solves r log 5 = log 5 - H2(delta) - 2 delta on (0, 4/5].
double gv_delta(double r);

struct ExponentChoice {
  double delta_star;
  double tau_star;
  // -(1/n) log2 Pe for the length-2n code at inner rate r.
  double exponent_per_symbol;
  double rate;  // log 5 (1 + r) / 2
  double exponent_per_channel_use;
};

ExponentChoice exponent_optimizer(double r);

// (1/n) log2 of the GV spectrum B_{delta n}; -inf below gv_delta(r).
double gv_log_spectrum(int n, double r, double delta);

Z5Matrix sample_random_G(int n, int k, std::uint64_t seed);

}  // namespace typewriter
