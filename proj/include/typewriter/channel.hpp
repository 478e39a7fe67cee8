#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "typewriter/words.hpp"

namespace typewriter {

// Counter-based generator: the stream for (seed, stream_id) is a pure
// function of both, so trial i always sees the same randomness no matter how
// trials are scheduled. SplitMix64 output function over a keyed counter.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  StreamRng(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()();

  bool coin() { return ((*this)() >> 63) != 0; }
  // Uniform integer in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Input i is received as i or i+1 (mod q), each with probability 1/2.
struct TypewriterChannel {
  int q = 5;
  double crossover = 0.5;

  double transition(Symbol in, Symbol out) const;
};

Word channel_sample(const Word& x, StreamRng& rng, const TypewriterChannel& channel = {});

// True iff every coordinate pair shares a possible output.
bool confusable(const Word& x, const Word& y);

// Probability that the output produced from x is also a possible output of y:
// 2^{-d_H(x,y)} for confusable pairs, 0 otherwise. Rejects x == y.
double pairwise_confusion_prob(const Word& x, const Word& y);

// Exact block error of ML decoding with uniform tie-breaking for the code
// {x, y}, averaged over the two messages.
double two_codeword_error(const Word& x, const Word& y);

// ML decoding: every reachable codeword has likelihood 2^{-n}, so pick
// uniformly among the codewords from which y is reachable.
std::size_t ml_decode(const Code& code, const Word& y, StreamRng& rng);

struct SimResult {
  std::uint64_t trials = 0;
  std::uint64_t errors = 0;
  double estimate = 0;
  double ci95_halfwidth = 0;
  std::uint64_t seed = 0;
};

// Block error rate with uniformly drawn messages; trial i uses stream i.
SimResult monte_carlo_pe(const Code& code, std::uint64_t trials, std::uint64_t seed, int threads = 1);

// Frequency with which the output from x is reachable from y as well.
SimResult simulate_confusion(const Word& x, const Word& y, std::uint64_t trials, std::uint64_t seed);

}  // namespace typewriter
