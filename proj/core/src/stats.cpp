#include "minorkit/stats.hpp"

#include <algorithm>
#include <cstring>

namespace minorkit {

namespace {

// Tomita-style max clique: candidates are greedily colored, then expanded in
// reverse color order so the bound |R| + color(v) prunes whole suffixes.
struct CliqueSearch {
  const Graph& g;
  int best_size = 0;
  uint64_t best_set = 0;

  explicit CliqueSearch(const Graph& graph) : g(graph) {}

  void expand(uint64_t r, int r_size, uint64_t cand) {
    if (cand == 0) {
      if (r_size > best_size) {
        best_size = r_size;
        best_set = r;
      }
      return;
    }
    // Greedy coloring of cand, ascending index inside each color class.
    int m = std::popcount(cand);
    int order[kMaxVertices];
    int bound[kMaxVertices];
    int filled = 0;
    uint64_t uncolored = cand;
    int color = 0;
    while (uncolored) {
      ++color;
      uint64_t classable = uncolored;
      while (classable) {
        int v = std::countr_zero(classable);
        order[filled] = v;
        bound[filled] = color;
        ++filled;
        classable &= ~(uint64_t{1} << v);
        classable &= ~g.row(v);
        uncolored &= ~(uint64_t{1} << v);
      }
    }
    for (int idx = m - 1; idx >= 0; --idx) {
      if (r_size + bound[idx] <= best_size) return;
      int v = order[idx];
      expand(r | (uint64_t{1} << v), r_size + 1, cand & g.row(v));
      cand &= ~(uint64_t{1} << v);
    }
  }
};

// Unit-capacity vertex flow between non-adjacent s and t (Menger).
// Node 2v is the "in" copy, 2v+1 the "out" copy.
int vertex_flow(const Graph& g, int s, int t) {
  const int n = g.order();
  const int nodes = 2 * n;
  static thread_local std::vector<signed char> cap;
  cap.assign(static_cast<size_t>(nodes) * nodes, 0);
  auto at = [&](int a, int b) -> signed char& { return cap[static_cast<size_t>(a) * nodes + b]; };
  for (int v = 0; v < n; ++v) at(2 * v, 2 * v + 1) = 1;
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) at(2 * v + 1, 2 * u) = 2;  // capacity 2 acts as infinity per augmentation
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(nodes);
  std::vector<int> queue(nodes);
  while (true) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    int head = 0, tail = 0;
    queue[tail++] = source;
    while (head < tail && parent[sink] < 0) {
      int a = queue[head++];
      for (int b = 0; b < nodes; ++b)
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue[tail++] = b;
        }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      at(parent[b], b) -= 1;
      at(b, parent[b]) += 1;
    }
    ++flow;
  }
  return flow;
}

struct ColoringSearch {
  const Graph& g;
  int n;
  int k;
  uint64_t max_nodes;
  uint64_t nodes = 0;
  bool budget_hit = false;
  std::vector<int> colors;
  std::vector<uint64_t> neighbor_colors;  // bitmask of colors seen on neighbors
  int colored = 0;
  int max_used = 0;  // number of distinct colors assigned so far

  ColoringSearch(const Graph& graph, int budget_k, uint64_t budget)
      : g(graph), n(graph.order()), k(budget_k), max_nodes(budget),
        colors(static_cast<size_t>(graph.order()), -1),
        neighbor_colors(static_cast<size_t>(graph.order()), 0) {}

  void assign(int v, int c) {
    colors[static_cast<size_t>(v)] = c;
    ++colored;
    for (int u : g.neighbors(v)) neighbor_colors[static_cast<size_t>(u)] |= uint64_t{1} << c;
  }

  void unassign(int v, int c) {
    colors[static_cast<size_t>(v)] = -1;
    --colored;
    for (int u : g.neighbors(v)) {
      uint64_t mask = 0;
      for (int w : g.neighbors(u))
        if (colors[static_cast<size_t>(w)] >= 0) mask |= uint64_t{1} << colors[static_cast<size_t>(w)];
      neighbor_colors[static_cast<size_t>(u)] = mask;
    }
    (void)c;
  }

  bool solve() {
    ++nodes;
    if (max_nodes && nodes > max_nodes) {
      budget_hit = true;
      return false;
    }
    if (colored == n) return true;
    int pick = -1, pick_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<size_t>(v)] >= 0) continue;
      int sat = std::popcount(neighbor_colors[static_cast<size_t>(v)]);
      if (sat > pick_sat) {
        pick_sat = sat;
        pick = v;
      }
    }
    const int cap = std::min(k, max_used + 1);
    const uint64_t forbidden = neighbor_colors[static_cast<size_t>(pick)];
    for (int c = 0; c < cap; ++c) {
      if ((forbidden >> c) & 1) continue;
      const int prev_used = max_used;
      if (c == max_used) ++max_used;
      assign(pick, c);
      if (solve()) return true;
      unassign(pick, c);
      max_used = prev_used;
      if (budget_hit) return false;
    }
    return false;
  }
};

}  // namespace

VertexSet maximum_clique(const Graph& g) {
  if (g.order() == 0) return VertexSet();
  CliqueSearch search(g);
  search.expand(0, 0, g.vertices().bits());
  return VertexSet(search.best_set);
}

int clique_number(const Graph& g) { return maximum_clique(g).count(); }

int independence_number(const Graph& g) { return clique_number(complement(g)); }

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  bool complete = true;
  for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
  if (complete) return n - 1;
  int best = n - 1;
  for (int s = 0; s < n; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.has_edge(s, t)) best = std::min(best, vertex_flow(g, s, t));
  return best;
}

bool is_triangle_free(const Graph& g) {
  for (auto [i, j] : g.edge_list())
    if (g.row(i) & g.row(j)) return false;
  return true;
}

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  const int n = g.order();
  s.edge_count = g.edge_count();
  if (n > 0) {
    s.min_degree = n;
    for (int v = 0; v < n; ++v) {
      s.min_degree = std::min(s.min_degree, g.degree(v));
      s.max_degree = std::max(s.max_degree, g.degree(v));
    }
  }
  s.clique_number = clique_number(g);
  s.independence_number = independence_number(g);
  s.connectivity = vertex_connectivity(g);
  return s;
}

BoundedColoring chromatic_at_most_bounded(const Graph& g, int k, uint64_t max_nodes) {
  BoundedColoring out;
  if (k < 0) throw std::invalid_argument("color budget must be nonnegative");
  const int n = g.order();
  if (n == 0) {
    out.decided = true;
    out.coloring = std::vector<int>{};
    return out;
  }
  if (k == 0) {
    out.decided = true;
    return out;
  }
  VertexSet clique = maximum_clique(g);
  if (clique.count() > k) {
    out.decided = true;
    return out;
  }
  ColoringSearch search(g, k, max_nodes);
  int c = 0;
  for (int v : clique) {
    search.assign(v, c++);
    search.max_used = c;
  }
  bool found = search.solve();
  out.nodes = search.nodes;
  if (search.budget_hit) return out;
  out.decided = true;
  if (found) out.coloring = search.colors;
  return out;
}

std::optional<std::vector<int>> chromatic_at_most(const Graph& g, int k) {
  return chromatic_at_most_bounded(g, k, 0).coloring;
}

bool is_proper_coloring(const Graph& g, std::span<const int> colors, int k) {
  if (static_cast<int>(colors.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (colors[static_cast<size_t>(v)] < 0 || colors[static_cast<size_t>(v)] >= k) return false;
  for (auto [i, j] : g.edge_list())
    if (colors[static_cast<size_t>(i)] == colors[static_cast<size_t>(j)]) return false;
  return true;
}

}  // namespace minorkit
