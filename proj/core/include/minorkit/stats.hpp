#pragma once

#include <optional>
#include <span>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

struct GraphStats {
  int min_degree = 0;
  int max_degree = 0;
  int edge_count = 0;
  int clique_number = 0;         // omega
  int independence_number = 0;   // alpha = omega of the complement
  int connectivity = 0;          // kappa
};

/// Exact invariants. Clique number by branch and bound with greedy-coloring
/// bounds, connectivity by unit-capacity vertex flows over all non-adjacent
/// source/sink pairs. Complete graphs get connectivity n-1.
GraphStats graph_stats(const Graph& g);

/// A maximum clique, deterministic (ties broken by ascending vertex index).
VertexSet maximum_clique(const Graph& g);

int clique_number(const Graph& g);
int independence_number(const Graph& g);
int vertex_connectivity(const Graph& g);

bool is_triangle_free(const Graph& g);

/// Exact decision: proper coloring with at most k colors, or nullopt if
/// impossible. Saturation-ordered branch and bound seeded with a maximum
/// clique; saturation ties broken by ascending index. Colors are 0..k-1.
std::optional<std::vector<int>> chromatic_at_most(const Graph& g, int k);

struct BoundedColoring {
  bool decided = false;                       // false iff the node budget ran out
  std::optional<std::vector<int>> coloring;   // meaningful only when decided
  uint64_t nodes = 0;
};

/// Same search with a node budget (0 means unlimited).
BoundedColoring chromatic_at_most_bounded(const Graph& g, int k, uint64_t max_nodes);

bool is_proper_coloring(const Graph& g, std::span<const int> colors, int k);

}  // namespace minorkit
