#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "typewriter/words.hpp"

namespace typewriter {

inline constexpr std::size_t kDenseLimit = 10'000'000;

// Dense complex function on Z_q^n, indexed by word_index().
class GroupFunction {
 public:
  GroupFunction(int n, int q);

  int n() const { return n_; }
  int q() const { return q_; }
  std::size_t size() const { return values_.size(); }

  std::complex<double>& operator[](std::size_t i) { return values_[i]; }
  const std::complex<double>& operator[](std::size_t i) const { return values_[i]; }
  std::complex<double>& at(const Word& x) { return values_[word_index(x, q_)]; }
  const std::complex<double>& at(const Word& x) const { return values_[word_index(x, q_)]; }

  std::vector<std::complex<double>>& values() { return values_; }
  const std::vector<std::complex<double>>& values() const { return values_; }

 private:
  int n_;
  int q_;
  std::vector<std::complex<double>> values_;
};

// f^(w) = sum_x f(x) exp(2 pi i <w, x> / q).
GroupFunction dft(const GroupFunction& f);

// Inverse of dft(): f(x) = q^{-n} sum_w f^(w) exp(-2 pi i <w, x> / q).
GroupFunction inverse_dft(const GroupFunction& f);

// (f * g)(x) = sum_y f(y) g(x - y).
GroupFunction convolve(const GroupFunction& f, const GroupFunction& g);

// (f, g) = q^{-n} sum_x conj(f(x)) g(x).
std::complex<double> inner_product(const GroupFunction& f, const GroupFunction& g);

GroupFunction pointwise_product(const GroupFunction& f, const GroupFunction& g);

GroupFunction indicator(const Code& code);

}  // namespace typewriter
