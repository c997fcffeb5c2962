#pragma once

// Dense simple graphs on at most 64 vertices, stored as one adjacency word
// per vertex so neighborhood operations are single machine instructions.
// Graphs and vertex sets are immutable values; operations return new values
// and are safe to share across threads.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minorkit {

inline constexpr int kMaxVertices = 64;

/// Bitmask over vertex indices 0..63.
class VertexSet {
public:
  constexpr VertexSet() = default;
  explicit constexpr VertexSet(uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(uint64_t{1} << v); }

  /// The set {0, 1, ..., n-1}.
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  int count() const { return std::popcount(bits_); }

  /// Smallest element, or -1 on the empty set.
  int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(uint64_t{1} << v)); }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  bool operator==(const VertexSet&) const = default;

  std::vector<int> to_vector() const;

  /// Iterates set bits in ascending order; usable in range-for.
  class iterator {
  public:
    explicit iterator(uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
  private:
    uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

private:
  uint64_t bits_ = 0;
};

/// Immutable simple graph. Invariants: no loops, symmetric adjacency,
/// bits at or beyond order() clear in every row.
class Graph {
public:
  Graph() = default;  // the graph on 0 vertices

  static Graph empty(int n);
  static Graph complete(int n);

  /// Builds from an edge list. Duplicate edges collapse; loops,
  /// out-of-range endpoints and n > 64 are rejected with std::invalid_argument.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Builds from raw adjacency rows; validates all invariants.
  static Graph from_rows(int n, std::span<const uint64_t> rows);

  int order() const { return n_; }
  int edge_count() const;
  bool has_edge(int i, int j) const { return (adj_[i] >> j) & 1; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  uint64_t row(int v) const { return adj_[v]; }

  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighborhood(int v) const { return VertexSet(adj_[v] | (uint64_t{1} << v)); }
  VertexSet vertices() const { return VertexSet::first_n(n_); }

  Graph with_edge(int i, int j) const;
  Graph without_edge(int i, int j) const;

  /// Edges as (i, j) with i < j, lexicographic.
  std::vector<std::pair<int, int>> edge_list() const;
  /// Missing edges (edges of the complement), same order.
  std::vector<std::pair<int, int>> missing_edge_list() const;

  bool operator==(const Graph&) const = default;

private:
  friend Graph complement(const Graph&);
  friend Graph induced_subgraph(const Graph&, VertexSet);
  friend Graph permuted(const Graph&, std::span<const int>);
  friend Graph detail_from_rows_unchecked(int, const std::array<uint64_t, kMaxVertices>&);

  static Graph unchecked(int n, const std::array<uint64_t, kMaxVertices>& rows);

  int n_ = 0;
  std::array<uint64_t, kMaxVertices> adj_{};
};

/// Internal fast path for hot loops; the caller owns the invariants
/// (symmetric, loop-free, bits beyond n clear).
Graph detail_from_rows_unchecked(int n, const std::array<uint64_t, kMaxVertices>& rows);

Graph complement(const Graph& g);

/// Contracts edge ij and deletes resulting parallel edges. The merged vertex
/// keeps index min(i,j); vertices above max(i,j) shift down by one.
/// Rejects ij not an edge.
Graph contract_edge(const Graph& g, int i, int j);

/// Vertices of s relabeled 0..|s|-1 preserving ascending index order.
Graph induced_subgraph(const Graph& g, VertexSet s);

Graph delete_vertex(const Graph& g, int v);

/// Relabels so position p holds old vertex order[p]; order must be a
/// permutation of 0..n-1.
Graph permuted(const Graph& g, std::span<const int> order);

/// Disjoint union; vertices of b are shifted past a.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Join: disjoint union plus all edges between the two sides.
Graph join(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// Maximal connected vertex sets, ascending by minimum element.
std::vector<VertexSet> components(const Graph& g);

}  // namespace minorkit
