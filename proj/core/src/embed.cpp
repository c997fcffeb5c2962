#include "minorkit/embed.hpp"

#include <algorithm>
#include <numeric>

namespace minorkit {

namespace {

// Backtracking embedding, pattern vertices in descending degree order so
// tight constraints bind early. Candidates must dominate the pattern degree
// and match adjacency to everything already placed.
struct EmbedSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order;       // pattern vertices, search order
  std::vector<int> image;       // image[pattern vertex] = host vertex
  uint64_t used = 0;

  EmbedSearch(const Graph& h, const Graph& p) : host(h), pattern(p) {
    order.resize(static_cast<size_t>(p.order()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (p.degree(a) != p.degree(b)) return p.degree(a) > p.degree(b);
      return a < b;
    });
    image.assign(static_cast<size_t>(p.order()), -1);
  }

  bool place(size_t k) {
    if (k == order.size()) return true;
    const int pv = order[k];
    const int pdeg = pattern.degree(pv);
    for (int hv = 0; hv < host.order(); ++hv) {
      if ((used >> hv) & 1) continue;
      if (host.degree(hv) < pdeg) continue;
      bool ok = true;
      for (size_t d = 0; d < k && ok; ++d) {
        const int pu = order[d];
        if (pattern.has_edge(pv, pu) && !host.has_edge(hv, image[static_cast<size_t>(pu)])) ok = false;
      }
      if (!ok) continue;
      image[static_cast<size_t>(pv)] = hv;
      used |= uint64_t{1} << hv;
      if (place(k + 1)) return true;
      used &= ~(uint64_t{1} << hv);
      image[static_cast<size_t>(pv)] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                                        bool spanning) {
  if (spanning && host.order() != pattern.order()) return std::nullopt;
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
  EmbedSearch search(host, pattern);
  if (!search.place(0)) return std::nullopt;
  return search.image;
}

bool has_subgraph(const Graph& host, const Graph& pattern) {
  return find_subgraph_embedding(host, pattern, false).has_value();
}

bool has_spanning_subgraph(const Graph& host, const Graph& pattern) {
  return find_subgraph_embedding(host, pattern, true).has_value();
}

}  // namespace minorkit
