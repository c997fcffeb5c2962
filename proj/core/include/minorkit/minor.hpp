#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Either the family of graphs reachable from K_t by deleting up to s edges
/// (family mode), or one explicit target graph.
struct MinorTarget {
  int t = 0;
  int s = 0;
  std::optional<Graph> target_graph;

  static MinorTarget family(int t, int s);
  static MinorTarget of_graph(Graph h);
  bool family_mode() const { return !target_graph.has_value(); }
  std::string describe() const;
};

/// Witness for containment: t pairwise disjoint connected branch sets plus
/// the branch-set index pairs with no connecting edge.
struct MinorModel {
  std::vector<VertexSet> branch_sets;
  std::vector<std::pair<int, int>> missing_pairs;
};

struct MinorCheck {
  bool ok = false;
  std::string diagnostic;  // names the first violated clause
};

MinorCheck verify_model(const Graph& g, const MinorModel& model, const MinorTarget& target);

struct MinorSearchResult {
  bool decided = false;  // false iff the node budget ran out
  std::optional<MinorModel> model;
  uint64_t nodes = 0;
};

/// Exact branch-and-bound over branch-set models. max_nodes 0 = unlimited.
MinorSearchResult find_minor(const Graph& g, const MinorTarget& target, uint64_t max_nodes = 0);

/// Some member of the t/s family is a minor of g, i.e. g hosts t disjoint
/// connected branch sets with at most s pairwise non-adjacent pairs.
std::optional<MinorModel> find_family_minor(const Graph& g, int t, int s);

/// Explicit-target containment: branch-set pairs adjacent wherever the
/// corresponding h vertices are adjacent.
std::optional<MinorModel> find_minor_of(const Graph& g, const Graph& h);

/// Entry fast path: fewer than t vertices or fewer than C(t,2)-s edges
/// already refutes family containment.
bool family_edge_bound_rejects(const Graph& g, int t, int s);

}  // namespace minorkit
