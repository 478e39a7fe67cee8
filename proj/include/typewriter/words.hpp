#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace typewriter {

using Symbol = std::uint8_t;
using Word = std::vector<Symbol>;

// Ordered list of M words of common length over Z_q.
struct Code {
  int q = 5;
  std::vector<Word> words;

  std::size_t size() const { return words.size(); }
  std::size_t length() const { return words.empty() ? 0 : words.front().size(); }
};

// Mixed-radix index of a word, first symbol most significant, so index order
// is lexicographic order.
std::size_t word_index(const Word& w, int q);
Word word_from_index(std::size_t index, int n, int q);

// q^n with an overflow-safe check against limit; returns 0 if q^n > limit.
std::size_t checked_power(int q, int n, std::size_t limit);

}  // namespace typewriter
