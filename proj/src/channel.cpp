#include "typewriter/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include <fmt/core.h>

namespace typewriter {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool reachable(const Word& x, const Word& y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int diff = (y[i] - x[i] + 5) % 5;
    if (diff > 1) return false;
  }
  return true;
}

void require_same_length(const Word& x, const Word& y, const char* what) {
  if (x.size() != y.size()) {
    throw std::invalid_argument(fmt::format("{}: length mismatch {} vs {}", what, x.size(), y.size()));
  }
}

SimResult summarise(std::uint64_t trials, std::uint64_t errors, std::uint64_t seed) {
  SimResult r;
  r.trials = trials;
  r.errors = errors;
  r.seed = seed;
  r.estimate = static_cast<double>(errors) / static_cast<double>(trials);
  r.ci95_halfwidth = errors == 0 ? 3.0 / static_cast<double>(trials)
                                 : 1.96 * std::sqrt(r.estimate * (1.0 - r.estimate) / trials);
  return r;
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream_id)
    : state_(mix64(seed ^ mix64(stream_id + 0x9e3779b97f4a7c15ULL))) {}

StreamRng::result_type StreamRng::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::uint64_t StreamRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("StreamRng::below: empty range");
  const std::uint64_t limit = max() - max() % bound;
  while (true) {
    const std::uint64_t v = (*this)();
    if (v < limit) return v % bound;
  }
}

double TypewriterChannel::transition(Symbol in, Symbol out) const {
  if (out == in) return 1.0 - crossover;
  if (out == (in + 1) % q) return crossover;
  return 0.0;
}

Word channel_sample(const Word& x, StreamRng& rng, const TypewriterChannel& channel) {
  Word y(x.size());
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i % 64 == 0) bits = rng();
    const bool shift = (bits >> (i % 64)) & 1u;
    y[i] = static_cast<Symbol>((x[i] + (shift ? 1 : 0)) % channel.q);
  }
  return y;
}

bool confusable(const Word& x, const Word& y) {
  require_same_length(x, y, "confusable");
  for (std::size_t i = 0; i < x.size(); ++i) {
    const int diff = (x[i] - y[i] + 5) % 5;
    if (diff == 2 || diff == 3) return false;
  }
  return true;
}

double pairwise_confusion_prob(const Word& x, const Word& y) {
  require_same_length(x, y, "pairwise_confusion_prob");
  if (x == y) throw std::invalid_argument("pairwise_confusion_prob: x and y must differ");
  if (!confusable(x, y)) return 0.0;
  int hamming = 0;
  for (std::size_t i = 0; i < x.size(); ++i) hamming += x[i] != y[i];
  return std::exp2(-hamming);
}

double two_codeword_error(const Word& x, const Word& y) { return 0.5 * pairwise_confusion_prob(x, y); }

std::size_t ml_decode(const Code& code, const Word& y, StreamRng& rng) {
  if (code.words.empty()) throw std::invalid_argument("ml_decode: empty code");
  require_same_length(code.words.front(), y, "ml_decode");
  std::vector<std::size_t> compatible;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (reachable(code.words[i], y)) compatible.push_back(i);
  }
  if (compatible.empty()) throw std::runtime_error("ml_decode: output not reachable from any codeword");
  if (compatible.size() == 1) return compatible.front();
  return compatible[rng.below(compatible.size())];
}

SimResult monte_carlo_pe(const Code& code, std::uint64_t trials, std::uint64_t seed, int threads) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_pe: need at least one trial");
  if (code.words.empty()) throw std::invalid_argument("monte_carlo_pe: empty code");
  threads = std::max(1, threads);

  auto run = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t errors = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      StreamRng rng(seed, trial);
      const std::size_t sent = rng.below(code.size());
      const Word y = channel_sample(code.words[sent], rng);
      errors += ml_decode(code, y, rng) != sent;
    }
    return errors;
  };

  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (trials + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(trials, chunk * t);
    const std::uint64_t end = std::min(trials, begin + chunk);
    pool.emplace_back([&, t, begin, end] { partial[t] = run(begin, end); });
  }
  for (auto& th : pool) th.join();
  std::uint64_t errors = 0;
  for (auto e : partial) errors += e;
  return summarise(trials, errors, seed);
}

SimResult simulate_confusion(const Word& x, const Word& y, std::uint64_t trials, std::uint64_t seed) {
  require_same_length(x, y, "simulate_confusion");
  if (trials < 1) throw std::invalid_argument("simulate_confusion: need at least one trial");
  std::uint64_t hits = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    StreamRng rng(seed, trial);
    hits += reachable(y, channel_sample(x, rng));
  }
  return summarise(trials, hits, seed);
}

}  // namespace typewriter
