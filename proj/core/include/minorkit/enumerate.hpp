#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Filter for isomorph-free enumeration. Bounds on the clique number,
/// independence number, edge count (upper) and triangle-freeness prune
/// the generation tree; minimum degree and minimum edges are checked on
/// the finished graphs.
struct GraphFilter {
  int n = 0;
  std::optional<int> min_degree;
  std::optional<int> max_degree;
  std::optional<int> min_edges;
  std::optional<int> max_edges;
  std::optional<int> clique_at_most;
  std::optional<int> independence_at_most;
  bool triangle_free = false;

  /// Throws std::invalid_argument on inconsistent bounds or n > 12.
  void validate() const;

  /// Canonical key=value rendering, used in report headers.
  std::string describe() const;

  bool accepts(const Graph& g) const;
};

/// Streams exactly one canonically labeled representative per isomorphism
/// class matching the filter, in ascending canonical-form (graph6 byte)
/// order. Output is identical for every worker count.
void enumerate_graphs(const GraphFilter& filter, const std::function<void(const Graph&)>& yield,
                      int workers = 1);

std::vector<Graph> all_graphs(const GraphFilter& filter, int workers = 1);

uint64_t count_graphs(const GraphFilter& filter, int workers = 1);

}  // namespace minorkit
