#include "minorkit/canonical.hpp"

#include <algorithm>

#include "minorkit/graph6.hpp"

namespace minorkit {

namespace {

// Canonical form = the vertex order whose upper-triangle adjacency bit
// string, read in graph6 column-major order, is lexicographically minimal
// over all n! orders. Column-major order means the string restricted to the
// first k positions is exactly the string of the induced subgraph on them,
// so a minimal labeling stays minimal after deleting its last vertex. The
// orderly enumerator depends on that prefix property.
//
// The search places one vertex per position. The column word of a candidate
// (its adjacency bits to the placed prefix, earliest position most
// significant) is compared against the incumbent best; larger prunes, equal
// descends, smaller overwrites the incumbent tail. Two safe symmetry cuts
// keep near-regular graphs tractable: twin candidates (same neighborhoods
// outside the pair) are interchangeable by a transposition automorphism, and
// automorphisms discovered at tied leaves prune candidates that a known
// generator fixing the placed prefix maps to an earlier sibling.
struct CanonSearch {
  const Graph& g;
  int n;
  bool frozen;          // canonicity test: never improve, just detect smaller
  bool smaller_found = false;

  std::array<uint64_t, kMaxVertices> best_col{};
  std::array<int, kMaxVertices> best_perm{};
  std::array<int, kMaxVertices> cur{};
  uint64_t placed = 0;

  static constexpr int kMaxGens = 48;
  std::vector<std::array<int8_t, kMaxVertices>> gens;

  CanonSearch(const Graph& graph, bool test_mode) : g(graph), n(graph.order()), frozen(test_mode) {
    for (int p = 0; p < n; ++p) best_perm[p] = p;
    for (int p = 0; p < n; ++p) {
      uint64_t w = 0;
      for (int d = 0; d < p; ++d) w = (w << 1) | (g.has_edge(d, p) ? 1 : 0);
      best_col[p] = w;
    }
  }

  uint64_t column_word(int v, int depth) const {
    uint64_t w = 0;
    for (int d = 0; d < depth; ++d) w = (w << 1) | ((g.row(cur[d]) >> v) & 1);
    return w;
  }

  void record_automorphism() {
    if (static_cast<int>(gens.size()) >= kMaxGens) return;
    std::array<int8_t, kMaxVertices> phi{};
    bool identity = true;
    for (int p = 0; p < n; ++p) {
      phi[best_perm[p]] = static_cast<int8_t>(cur[p]);
      if (best_perm[p] != cur[p]) identity = false;
    }
    if (!identity) gens.push_back(phi);
  }

  // depth = number of placed vertices; invariant: placed prefix equals the
  // incumbent best prefix. improved = some overwrite happened on this path.
  void dfs(int depth, bool improved) {
    if (depth == n) {
      if (frozen) {
        if (improved) smaller_found = true;
        else record_automorphism();
      } else {
        if (!improved) record_automorphism();
        else std::copy(cur.begin(), cur.begin() + n, best_perm.begin());
      }
      return;
    }

    // Candidates sorted by column word, then index.
    struct Cand { uint64_t col; int v; };
    Cand cands[kMaxVertices];
    int m = 0;
    for (int v : VertexSet(~placed & VertexSet::first_n(n).bits()))
      cands[m++] = {column_word(v, depth), v};
    std::sort(cands, cands + m, [](const Cand& a, const Cand& b) {
      return a.col != b.col ? a.col < b.col : a.v < b.v;
    });

    uint64_t tried = 0;  // candidates already expanded at this node
    for (int idx = 0; idx < m; ++idx) {
      const uint64_t col = cands[idx].col;
      const int v = cands[idx].v;
      if (col > best_col[depth]) break;  // sorted: the rest only get larger

      // Twin cut: an already-tried candidate with the same neighborhood
      // outside the pair gives an interchangeable subtree.
      bool skip = false;
      for (int u : VertexSet(tried)) {
        const uint64_t pairbits = (uint64_t{1} << u) | (uint64_t{1} << v);
        if (((g.row(u) ^ g.row(v)) & ~pairbits) == 0) {
          skip = true;
          break;
        }
      }
      // Generator cut: a known automorphism fixing the placed prefix
      // pointwise maps v to an already-tried sibling.
      if (!skip && !gens.empty()) {
        for (const auto& phi : gens) {
          bool fixes = true;
          for (int d = 0; d < depth && fixes; ++d) fixes = phi[cur[d]] == cur[d];
          if (fixes && ((tried >> phi[v]) & 1)) {
            skip = true;
            break;
          }
        }
      }
      if (skip) {
        tried |= uint64_t{1} << v;
        continue;
      }

      bool child_improved = improved;
      uint64_t saved_tail_first = 0;
      bool overwrote = false;
      if (col < best_col[depth]) {
        if (frozen) {
          smaller_found = true;
          return;
        }
        // New best prefix: overwrite this column, open up the tail.
        saved_tail_first = best_col[depth];
        best_col[depth] = col;
        for (int p = depth + 1; p < n; ++p) best_col[p] = ~uint64_t{0};
        overwrote = true;
        child_improved = true;
      }
      (void)saved_tail_first;
      (void)overwrote;

      cur[depth] = v;
      placed |= uint64_t{1} << v;
      dfs(depth + 1, child_improved);
      placed &= ~(uint64_t{1} << v);
      tried |= uint64_t{1} << v;

      if (frozen && smaller_found) return;
    }
  }

  void run() { dfs(0, false); }
};

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
  CanonSearch search(g, false);
  search.run();
  return std::vector<int>(search.best_perm.begin(), search.best_perm.begin() + g.order());
}

Graph canonical_graph(const Graph& g) {
  auto order = canonical_order(g);
  return permuted(g, order);
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{to_graph6(canonical_graph(g))};
}

bool is_canonically_labeled(const Graph& g) {
  if (g.order() <= 1) return true;
  CanonSearch search(g, true);
  search.run();
  return !search.smaller_found;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace minorkit
