#pragma once

#include <cstdint>
#include <vector>

namespace typewriter {

// Undirected simple graph stored as adjacency bitsets.
class Graph {
 public:
  explicit Graph(int vertices);

  int size() const { return n_; }
  void add_edge(int a, int b);
  bool adjacent(int a, int b) const;

  const std::vector<std::uint64_t>& neighbours(int v) const { return adj_[v]; }

 private:
  int n_;
  std::vector<std::vector<std::uint64_t>> adj_;
};

// Exact maximum clique by branch and bound with greedy-colouring bounds.
// Branching follows increasing vertex order, so the clique returned is the
// lexicographically smallest among all maximum cliques.
std::vector<int> max_clique(const Graph& g);

}  // namespace typewriter
