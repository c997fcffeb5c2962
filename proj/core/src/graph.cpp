#include "minorkit/graph.hpp"

#include <stdexcept>

namespace minorkit {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(count()));
  for (int v : *this) out.push_back(v);
  return out;
}

Graph Graph::unchecked(int n, const std::array<uint64_t, kMaxVertices>& rows) {
  Graph g;
  g.n_ = n;
  g.adj_ = rows;
  return g;
}

Graph detail_from_rows_unchecked(int n, const std::array<uint64_t, kMaxVertices>& rows) {
  return Graph::unchecked(n, rows);
}

Graph Graph::empty(int n) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::complete(int n) {
  Graph g = empty(n);
  const uint64_t all = VertexSet::first_n(n).bits();
  for (int v = 0; v < n; ++v) g.adj_[v] = all & ~(uint64_t{1} << v);
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g = empty(n);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
    if (i == j) throw std::invalid_argument("loops are not allowed");
    g.adj_[i] |= uint64_t{1} << j;
    g.adj_[j] |= uint64_t{1} << i;
  }
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_rows(int n, std::span<const uint64_t> rows) {
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("graph order out of range");
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("row count does not match order");
  const uint64_t range = VertexSet::first_n(n).bits();
  Graph g = empty(n);
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~range) throw std::invalid_argument("adjacency bits beyond order");
    if ((rows[i] >> i) & 1) throw std::invalid_argument("loops are not allowed");
    g.adj_[i] = rows[i];
  }
  for (int i = 0; i < n; ++i)
    for (int j : VertexSet(g.adj_[i]))
      if (!((g.adj_[j] >> i) & 1)) throw std::invalid_argument("adjacency not symmetric");
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

Graph Graph::with_edge(int i, int j) const {
  if (i == j) throw std::invalid_argument("loops are not allowed");
  Graph g = *this;
  g.adj_[i] |= uint64_t{1} << j;
  g.adj_[j] |= uint64_t{1} << i;
  return g;
}

Graph Graph::without_edge(int i, int j) const {
  Graph g = *this;
  g.adj_[i] &= ~(uint64_t{1} << j);
  g.adj_[j] &= ~(uint64_t{1} << i);
  return g;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j : VertexSet(adj_[i] & ~VertexSet::first_n(i + 1).bits())) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<int, int>> Graph::missing_edge_list() const {
  return complement(*this).edge_list();
}

Graph complement(const Graph& g) {
  const int n = g.order();
  const uint64_t all = VertexSet::first_n(n).bits();
  std::array<uint64_t, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[v] = all & ~g.adj_[v] & ~(uint64_t{1} << v);
  return Graph::unchecked(n, rows);
}

Graph contract_edge(const Graph& g, int i, int j) {
  if (!g.has_edge(i, j)) throw std::invalid_argument("contract_edge requires an edge");
  const int a = i < j ? i : j;
  const int b = i < j ? j : i;
  const int n = g.order();
  std::vector<std::pair<int, int>> edges;
  auto remap = [&](int v) { return v > b ? v - 1 : v; };
  for (auto [u, v] : g.edge_list()) {
    int uu = u == b ? a : u;
    int vv = v == b ? a : v;
    if (uu == vv) continue;  // the contracted edge itself
    edges.emplace_back(remap(uu), remap(vv));
  }
  return Graph::from_edges(n - 1, edges);
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  s = s & g.vertices();
  const int k = s.count();
  std::array<int, kMaxVertices> map{};
  int idx = 0;
  for (int v : s) map[v] = idx++;
  std::array<uint64_t, kMaxVertices> rows{};
  for (int v : s) {
    uint64_t r = 0;
    for (int u : VertexSet(g.row(v) & s.bits())) r |= uint64_t{1} << map[u];
    rows[map[v]] = r;
  }
  return Graph::unchecked(k, rows);
}

Graph delete_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices().without(v));
}

Graph permuted(const Graph& g, std::span<const int> order) {
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::array<int, kMaxVertices> pos{};  // pos[old vertex] = new position
  uint64_t seen = 0;
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    if (v < 0 || v >= n || (seen >> v) & 1) throw std::invalid_argument("not a permutation");
    seen |= uint64_t{1} << v;
    pos[v] = p;
  }
  std::array<uint64_t, kMaxVertices> rows{};
  for (int p = 0; p < n; ++p) {
    uint64_t r = 0;
    for (int u : g.neighbors(order[p])) r |= uint64_t{1} << pos[u];
    rows[p] = r;
  }
  return Graph::unchecked(n, rows);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int n = a.order() + b.order();
  auto edges = a.edge_list();
  for (auto [u, v] : b.edge_list()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(n, edges);
}

Graph join(const Graph& a, const Graph& b) {
  Graph g = disjoint_union(a, b);
  auto edges = g.edge_list();
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) edges.emplace_back(u, a.order() + v);
  return Graph::from_edges(g.order(), edges);
}

namespace {

uint64_t reach_from(const Graph& g, uint64_t start, uint64_t allowed) {
  uint64_t reached = start & allowed;
  uint64_t frontier = reached;
  while (frontier) {
    uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= g.row(v);
    next &= allowed & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

}  // namespace

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  const uint64_t all = VertexSet::first_n(n).bits();
  return reach_from(g, 1, all) == all;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  uint64_t rest = g.vertices().bits();
  while (rest) {
    uint64_t seed = rest & (~rest + 1);
    uint64_t comp = reach_from(g, seed, rest);
    out.emplace_back(comp);
    rest &= ~comp;
  }
  return out;
}

}  // namespace minorkit
