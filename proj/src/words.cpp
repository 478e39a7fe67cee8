#include "typewriter/words.hpp"

namespace typewriter {

std::size_t word_index(const Word& w, int q) {
  std::size_t idx = 0;
  for (Symbol s : w) idx = idx * q + s;
  return idx;
}

Word word_from_index(std::size_t index, int n, int q) {
  Word w(n);
  for (int i = n - 1; i >= 0; --i) {
    w[i] = static_cast<Symbol>(index % q);
    index /= q;
  }
  return w;
}

std::size_t checked_power(int q, int n, std::size_t limit) {
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) {
    if (p > limit / q) return 0;
    p *= q;
  }
  return p <= limit ? p : 0;
}

}  // namespace typewriter
