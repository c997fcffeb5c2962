#pragma once

#include <array>
#include <span>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

enum class MissingEdgePattern {
  kOneEdge,           // one edge removed
  kTwoIndependent,    // two edges with no shared endpoint
  kThreeIndependent,  // three pairwise disjoint edges
  kTwoAdjacent,       // two edges sharing an endpoint
};

/// K_t with the named edges removed. Rejects infeasible (t, pattern).
Graph complete_minus(int t, MissingEdgePattern pattern);

/// K_t minus an explicit list of edges (deduplicated).
Graph complete_minus(int t, std::span<const std::pair<int, int>> missing);

/// All non-isomorphic graphs obtained from K_t by deleting exactly s edges,
/// sorted by canonical form.
std::vector<Graph> family_members(int t, int s);

/// Recursive clique-gluing description. Each shape step names the k-clique
/// of the graph built so far that the next base copy is glued onto; the
/// copy-side clique is the lexicographically least k-clique of the base,
/// identified in ascending vertex order.
struct CockadeSpec {
  Graph base;
  int k = 0;
  int blocks = 1;
  std::vector<std::vector<int>> shape;  // blocks-1 gluing steps; empty = glue onto the least clique each time
};

/// Builds one cockade. Rejects gluing onto vertex sets that are not cliques.
Graph build_cockade(const CockadeSpec& spec);

/// Every isomorphism class of cockade over the base with at most max_blocks
/// copies, glued along k-cliques, sorted by canonical form. All host-clique,
/// copy-clique and identification choices are explored and deduplicated.
std::vector<Graph> all_cockades(const Graph& base, int k, int max_blocks);

/// All k-cliques of g as vertex sets, ascending lexicographic.
std::vector<VertexSet> cliques_of_size(const Graph& g, int k);

/// All 9-vertex graphs without a 5-clique, with independence number 2, that
/// are edge-minimal for those properties (removing any edge creates an
/// independent triple). Sorted by canonical form.
std::vector<Graph> derive_minimal_alpha2_family();

/// Intersection pattern of three distinct 5-element sets with union at
/// least 12, up to relabeling the three sets.
struct TriplePattern {
  std::array<int, 3> pairwise{};  // sorted |Li ∩ Lj| triple
  int triple = 0;                 // |L1 ∩ L2 ∩ L3|
  int union_size() const { return 15 - pairwise[0] - pairwise[1] - pairwise[2] + triple; }
  bool operator==(const TriplePattern&) const = default;
};

/// All realizable patterns, each confirmed by an explicit set system.
std::vector<TriplePattern> enumerate_triple_patterns();

}  // namespace minorkit
