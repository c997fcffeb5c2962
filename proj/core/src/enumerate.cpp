#include "minorkit/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "minorkit/canonical.hpp"
#include "minorkit/graph6.hpp"
#include "minorkit/stats.hpp"

namespace minorkit {

namespace {

constexpr int kMaxEnumerationOrder = 12;

// Orderly generation: a labeled graph is kept iff it equals its canonical
// labeling. Deleting the last vertex of a canonically labeled graph leaves a
// canonically labeled graph (the adjacency string of a prefix is a prefix of
// the string), so every class on k vertices extends from exactly one parent
// on k-1 vertices and is emitted exactly once. Children enumerate all 2^k
// neighborhoods of the new vertex; the canonicity test rejects duplicates.
struct Generator {
  const GraphFilter& filter;
  const std::function<void(const Graph&)>& yield;

  // Hereditary cuts, safe at every intermediate level: violations only get
  // worse as vertices are added.
  bool survives_partial(const Graph& g, int new_vertex) const {
    const int n_final = filter.n;
    if (filter.max_edges && g.edge_count() > *filter.max_edges) return false;
    if (filter.max_degree) {
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > *filter.max_degree) return false;
    }
    if (filter.triangle_free) {
      const uint64_t nb = g.row(new_vertex);
      for (int u : VertexSet(nb))
        if (g.row(u) & nb) return false;
    }
    // The parent satisfied the clique and independence caps, so a violation
    // in the child must involve the new vertex.
    if (filter.clique_at_most &&
        1 + clique_number(induced_subgraph(g, g.neighbors(new_vertex))) > *filter.clique_at_most)
      return false;
    if (filter.independence_at_most) {
      VertexSet nonneighbors = g.vertices() - g.closed_neighborhood(new_vertex);
      if (1 + independence_number(induced_subgraph(g, nonneighbors)) > *filter.independence_at_most)
        return false;
    }
    // Completion bounds for the floor constraints.
    const int room = n_final - g.order();
    if (filter.min_degree) {
      for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) + room < *filter.min_degree) return false;
    }
    if (filter.min_edges) {
      int e = g.edge_count();
      int gain = 0;
      for (int k = g.order(); k < n_final; ++k) gain += k;
      if (e + gain < *filter.min_edges) return false;
    }
    return true;
  }

  void extend(const Graph& g) {
    if (g.order() == filter.n) {
      if (filter.accepts(g)) yield(g);
      return;
    }
    const int k = g.order();
    const uint64_t subsets = uint64_t{1} << k;
    for (uint64_t s = 0; s < subsets; ++s) {
      Graph child = child_graph(g, s);
      if (!survives_partial(child, k)) continue;
      if (!is_canonically_labeled(child)) continue;
      extend(child);
    }
  }

  static Graph child_graph(const Graph& g, uint64_t neighborhood) {
    std::array<uint64_t, kMaxVertices> rows{};
    const int k = g.order();
    for (int v = 0; v < k; ++v) rows[v] = g.row(v) | (((neighborhood >> v) & 1) << k);
    rows[k] = neighborhood;
    return detail_from_rows_unchecked(k + 1, rows);
  }
};

}  // namespace

void GraphFilter::validate() const {
  if (n < 0) throw std::invalid_argument("filter order must be nonnegative");
  if (n > kMaxEnumerationOrder) throw std::invalid_argument("enumeration limited to 12 vertices");
  auto check_range = [&](const std::optional<int>& lo, const std::optional<int>& hi, const char* what) {
    if (lo && hi && *lo > *hi) throw std::invalid_argument(std::string("inconsistent bounds on ") + what);
  };
  check_range(min_degree, max_degree, "degree");
  check_range(min_edges, max_edges, "edges");
  if (min_degree && *min_degree > std::max(0, n - 1))
    throw std::invalid_argument("minimum degree unreachable at this order");
}

std::string GraphFilter::describe() const {
  std::ostringstream out;
  out << "n=" << n;
  if (min_degree) out << " min_degree=" << *min_degree;
  if (max_degree) out << " max_degree=" << *max_degree;
  if (min_edges) out << " min_edges=" << *min_edges;
  if (max_edges) out << " max_edges=" << *max_edges;
  if (clique_at_most) out << " clique_at_most=" << *clique_at_most;
  if (independence_at_most) out << " independence_at_most=" << *independence_at_most;
  if (triangle_free) out << " triangle_free";
  return out.str();
}

bool GraphFilter::accepts(const Graph& g) const {
  if (g.order() != n) return false;
  int mindeg = g.order();
  int maxdeg = 0;
  for (int v = 0; v < g.order(); ++v) {
    mindeg = std::min(mindeg, g.degree(v));
    maxdeg = std::max(maxdeg, g.degree(v));
  }
  if (g.order() == 0) mindeg = 0;
  if (min_degree && mindeg < *min_degree) return false;
  if (max_degree && maxdeg > *max_degree) return false;
  const int e = g.edge_count();
  if (min_edges && e < *min_edges) return false;
  if (max_edges && e > *max_edges) return false;
  if (triangle_free && !is_triangle_free(g)) return false;
  if (clique_at_most && clique_number(g) > *clique_at_most) return false;
  if (independence_at_most && independence_number(g) > *independence_at_most) return false;
  return true;
}

void enumerate_graphs(const GraphFilter& filter, const std::function<void(const Graph&)>& yield,
                      int workers) {
  filter.validate();
  if (workers < 1) workers = 1;

  std::vector<Graph> results;
  if (filter.n == 0) {
    Graph g0;
    if (filter.accepts(g0)) results.push_back(g0);
  } else {
    // Sequentially generate canonical parents one level below the target,
    // then split the final extension level across workers.
    std::vector<Graph> parents;
    {
      GraphFilter parent_filter = filter;  // hereditary parts applied inside Generator
      std::function<void(const Graph&)> collect = [&](const Graph& g) { parents.push_back(g); };
      Generator gen{parent_filter, collect};
      if (filter.n == 1) {
        parents.push_back(Graph());
      } else {
        // Walk levels 1..n-1 depth-first from the single graph on one vertex.
        std::function<void(const Graph&)> walk = [&](const Graph& g) {
          if (g.order() == filter.n - 1) {
            parents.push_back(g);
            return;
          }
          const int k = g.order();
          for (uint64_t s = 0; s < (uint64_t{1} << k); ++s) {
            Graph child = Generator::child_graph(g, s);
            if (!gen.survives_partial(child, k)) continue;
            if (!is_canonically_labeled(child)) continue;
            walk(child);
          }
        };
        walk(Graph::empty(1));
      }
    }

    std::mutex sink_mutex;
    std::atomic<size_t> next{0};
    auto work = [&]() {
      std::vector<Graph> local;
      std::function<void(const Graph&)> collect = [&](const Graph& g) { local.push_back(g); };
      Generator gen{filter, collect};
      while (true) {
        size_t idx = next.fetch_add(1);
        if (idx >= parents.size()) break;
        gen.extend(parents[idx]);
      }
      std::lock_guard<std::mutex> lock(sink_mutex);
      results.insert(results.end(), local.begin(), local.end());
    };

    if (workers == 1 || parents.size() <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
  }

  // Emitted graphs are canonically labeled, so their own graph6 bytes are
  // their canonical forms; sorting them gives the stream order.
  std::vector<std::pair<std::string, size_t>> keys;
  keys.reserve(results.size());
  for (size_t i = 0; i < results.size(); ++i) keys.emplace_back(to_graph6(results[i]), i);
  std::sort(keys.begin(), keys.end());
  for (const auto& [g6, i] : keys) yield(results[i]);
}

std::vector<Graph> all_graphs(const GraphFilter& filter, int workers) {
  std::vector<Graph> out;
  enumerate_graphs(filter, [&](const Graph& g) { out.push_back(g); }, workers);
  return out;
}

uint64_t count_graphs(const GraphFilter& filter, int workers) {
  uint64_t count = 0;
  enumerate_graphs(filter, [&](const Graph&) { ++count; }, workers);
  return count;
}

}  // namespace minorkit
