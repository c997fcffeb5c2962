#pragma once

#include <random>
#include <utility>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

// mt19937_64 output is pinned by the standard; avoiding <random>
// distributions keeps sampled graphs identical across standard libraries.

inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

inline Graph randomly_permuted(const Graph& g, std::mt19937_64& rng) {
  auto perm = random_permutation(g.order(), rng);
  return permuted(g, perm);
}

}  // namespace minorkit
