#include "typewriter/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/core.h>

namespace typewriter {

namespace {

void require_same_group(const GroupFunction& f, const GroupFunction& g) {
  if (f.n() != g.n() || f.q() != g.q()) throw std::invalid_argument("group functions on different groups");
}

// One-dimensional transform applied along every axis in turn.
GroupFunction separable_transform(const GroupFunction& f, int sign) {
  const int q = f.q();
  std::vector<std::complex<double>> roots(q);
  for (int k = 0; k < q; ++k) roots[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * k / q);

  GroupFunction out = f;
  std::vector<std::complex<double>> line(q);
  std::size_t stride = 1;
  for (int axis = 0; axis < f.n(); ++axis) {
    const std::size_t block = stride * q;
    for (std::size_t base = 0; base < out.size(); base += block) {
      for (std::size_t offset = 0; offset < stride; ++offset) {
        for (int w = 0; w < q; ++w) {
          std::complex<double> acc = 0.0;
          for (int x = 0; x < q; ++x) acc += out[base + offset + x * stride] * roots[(w * x) % q];
          line[w] = acc;
        }
        for (int w = 0; w < q; ++w) out[base + offset + w * stride] = line[w];
      }
    }
    stride = block;
  }
  return out;
}

}  // namespace

GroupFunction::GroupFunction(int n, int q) : n_(n), q_(q) {
  if (n < 1 || q < 2) throw std::invalid_argument("GroupFunction: need n >= 1, q >= 2");
  const std::size_t size = checked_power(q, n, kDenseLimit);
  if (size == 0) {
    throw std::length_error(fmt::format("GroupFunction: {}^{} exceeds dense limit {}", q, n, kDenseLimit));
  }
  values_.assign(size, 0.0);
}

GroupFunction dft(const GroupFunction& f) { return separable_transform(f, +1); }

GroupFunction inverse_dft(const GroupFunction& f) {
  GroupFunction out = separable_transform(f, -1);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& v : out.values()) v *= scale;
  return out;
}

GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f, g);
  const int n = f.n();
  const int q = f.q();
  GroupFunction out(n, q);
  std::vector<Word> words(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) words[i] = word_from_index(i, n, q);
  Word diff(n);
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::complex<double> acc = 0.0;
    for (std::size_t y = 0; y < f.size(); ++y) {
      if (f[y] == 0.0) continue;
      for (int k = 0; k < n; ++k) diff[k] = static_cast<Symbol>((words[x][k] - words[y][k] + q) % q);
      acc += f[y] * g.at(diff);
    }
    out[x] = acc;
  }
  return out;
}

std::complex<double> inner_product(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f, g);
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += std::conj(f[i]) * g[i];
  return acc / static_cast<double>(f.size());
}

GroupFunction pointwise_product(const GroupFunction& f, const GroupFunction& g) {
  require_same_group(f, g);
  GroupFunction out = f;
  for (std::size_t i = 0; i < f.size(); ++i) out[i] *= g[i];
  return out;
}

GroupFunction indicator(const Code& code) {
  GroupFunction f(static_cast<int>(code.length()), code.q);
  for (const auto& w : code.words) f.at(w) = 1.0;
  return f;
}

}  // namespace typewriter
