#include "typewriter/clique.hpp"

#include <bit>
#include <stdexcept>

namespace typewriter {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

bool test(const Bits& b, int v) { return (b[v >> 6] >> (v & 63)) & 1u; }
void reset(Bits& b, int v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

// Number of colours used by sequential greedy colouring of the candidate set.
int colour_bound(const Graph& g, Bits uncoloured) {
  int colours = 0;
  while (true) {
    bool any = false;
    Bits available = uncoloured;
    for (std::size_t wi = 0; wi < available.size(); ++wi) {
      while (available[wi]) {
        const int v = static_cast<int>(wi * 64 + std::countr_zero(available[wi]));
        any = true;
        reset(available, v);
        reset(uncoloured, v);
        const auto& nb = g.neighbours(v);
        for (std::size_t k = 0; k < available.size(); ++k) available[k] &= ~nb[k];
      }
    }
    if (!any) break;
    ++colours;
  }
  return colours;
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Bits all((g_.size() + 63) / 64, 0);
    for (int v = 0; v < g_.size(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    expand(all);
    return best_;
  }

 private:
  void expand(Bits candidates) {
    if (current_.size() > best_.size()) best_ = current_;
    for (int v = 0; v < g_.size(); ++v) {
      if (!test(candidates, v)) continue;
      const int remaining = popcount(candidates);
      const std::size_t cap = current_.size() + remaining;
      if (cap <= best_.size()) return;
      if (current_.size() + colour_bound(g_, candidates) <= best_.size()) return;

      Bits next = candidates;
      reset(next, v);
      const auto& nb = g_.neighbours(v);
      for (std::size_t k = 0; k < next.size(); ++k) next[k] &= nb[k];
      current_.push_back(v);
      expand(std::move(next));
      current_.pop_back();
      reset(candidates, v);
    }
  }

  const Graph& g_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

Graph::Graph(int vertices)
    : n_(vertices), adj_(vertices, std::vector<std::uint64_t>((vertices + 63) / 64, 0)) {
  if (vertices < 0) throw std::invalid_argument("Graph: negative size");
}

void Graph::add_edge(int a, int b) {
  if (a == b) return;
  adj_[a][b >> 6] |= std::uint64_t{1} << (b & 63);
  adj_[b][a >> 6] |= std::uint64_t{1} << (a & 63);
}

bool Graph::adjacent(int a, int b) const { return test(adj_[a], b); }

std::vector<int> max_clique(const Graph& g) {
  if (g.size() == 0) return {};
  return Search(g).run();
}

}  // namespace typewriter
