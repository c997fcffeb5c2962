#include "minorkit/minor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "minorkit/graph6.hpp"
#include "minorkit/stats.hpp"

namespace minorkit {

namespace {

constexpr int kMaxTargetOrder = 12;

uint64_t reach(const Graph& g, uint64_t seed, uint64_t allowed) {
  uint64_t reached = seed;
  uint64_t frontier = seed;
  while (frontier) {
    uint64_t next = 0;
    for (int v : VertexSet(frontier)) next |= g.row(v);
    next &= allowed & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

// Complete search over ordered branch-set models. Sets are assigned one at a
// time; a set's root is its minimum vertex and it only grows upward, so each
// set content is enumerated exactly once, and in family mode roots ascend
// across sets, which quotients out the t! relabelings of an unordered model.
// Growth uses the forbidden-set discipline of connected-superset
// enumeration; bans lift when the set closes. Pruning tracks a lower bound
// on branch-set pairs that can never become adjacent: pairs of closed sets
// are exact, a closed set is tested against the reachable extent of the open
// set, and a closed set with no edge into the unused pool can never meet any
// future set.
struct BranchSearch {
  const Graph& g;
  int n;
  int t;
  int budget_s;           // family mode: allowed missing pairs
  bool family;
  const Graph* required;  // explicit mode: target adjacency, degree-sorted
  uint64_t max_nodes;

  uint64_t nodes = 0;
  bool budget_hit = false;
  std::array<uint64_t, kMaxTargetOrder> sets{};
  std::array<uint64_t, kMaxTargetOrder> nbr{};    // union of rows over the set
  std::array<uint64_t, kMaxTargetOrder> floor_{};  // a set only grows above its root
  int missing_closed = 0;
  std::array<int, kMaxVertices> degree_order{};

  BranchSearch(const Graph& host, int target_order, int missing_budget, bool family_mode,
               const Graph* target, uint64_t budget)
      : g(host), n(host.order()), t(target_order), budget_s(missing_budget), family(family_mode),
        required(target), max_nodes(budget) {
    std::iota(degree_order.begin(), degree_order.begin() + n, 0);
    std::sort(degree_order.begin(), degree_order.begin() + n, [&](int a, int b) {
      if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
      return a < b;
    });
  }

  bool tick() {
    ++nodes;
    if (max_nodes && nodes > max_nodes) {
      budget_hit = true;
      return false;
    }
    return true;
  }

  // Minimum missing pairs among k future sets packed into the components of
  // g[avail]: sets in different components can never touch, and a component
  // holds at most one set per vertex. Packing largest components first
  // minimizes the forced cross pairs.
  int future_component_bound(uint64_t avail, int k) const {
    if (k <= 1) return 0;
    int sizes[kMaxVertices];
    int m = 0;
    uint64_t rest = avail;
    while (rest) {
      const uint64_t seed = rest & (~rest + 1);
      const uint64_t comp = reach(g, seed, rest);
      sizes[m++] = std::popcount(comp);
      rest &= ~comp;
    }
    std::sort(sizes, sizes + m, std::greater<int>());
    int cross = 0, placed = 0, remaining = k;
    for (int j = 0; j < m && remaining > 0; ++j) {
      const int take = std::min(sizes[j], remaining);
      cross += take * placed;
      placed += take;
      remaining -= take;
    }
    return cross;
  }

  // Open set i and choose its root over avail, ascending. Everything below
  // the root is dead for this subtree: set members grow upward and later
  // roots are larger.
  bool open_set(int i, uint64_t avail) {
    if (!tick()) return false;
    if (std::popcount(avail) < t - i) return false;
    if (family) {
      const int fut = t - i;  // sets i..t-1 all still live in avail
      int lb = missing_closed + future_component_bound(avail, fut);
      for (int a = 0; a < i; ++a)
        lb += std::max(0, fut - std::popcount(nbr[a] & avail));
      if (lb > budget_s) return false;
    } else {
      const uint64_t future = ((uint64_t{1} << t) - 1) & ~((uint64_t{1} << i) - 1);
      for (int a = 0; a < i; ++a)
        if ((nbr[a] & avail) == 0 && (required->row(a) & future)) return false;
    }
    for (int r : VertexSet(avail)) {
      const uint64_t below = (uint64_t{2} << r) - 1;  // r and everything smaller
      sets[i] = uint64_t{1} << r;
      nbr[i] = g.row(r);
      floor_[i] = below;
      // Family mode: roots ascend, so everything below r is dead for the
      // whole subtree. Explicit mode: sets are labeled, smaller vertices
      // stay available to later sets.
      const uint64_t sub_avail = family ? (avail & ~below) : (avail & ~(uint64_t{1} << r));
      if (extend_set(i, sub_avail, 0)) return true;
      if (budget_hit) return false;
    }
    return false;
  }

  // Set i is open with content sets[i]; avail excludes used and dead
  // vertices, banned is the forbidden mask of the growth discipline.
  bool extend_set(int i, uint64_t avail, uint64_t banned) {
    if (!tick()) return false;

    const uint64_t reachable = reach(g, sets[i], avail & ~banned & ~floor_[i]);
    if (family) {
      const int fut = t - 1 - i;
      int lb = missing_closed + future_component_bound(avail, fut);
      for (int a = 0; a < i; ++a) {
        if ((nbr[a] & reachable) == 0) ++lb;  // pair (a, i) dead
        lb += std::max(0, fut - std::popcount(nbr[a] & avail));
      }
      if (lb > budget_s) return false;
    } else {
      const uint64_t future = ((uint64_t{1} << t) - 1) & ~((uint64_t{1} << (i + 1)) - 1);
      for (int a = 0; a < i; ++a) {
        if (required->has_edge(a, i) && (nbr[a] & reachable) == 0) return false;
        if ((nbr[a] & avail) == 0 && (required->row(a) & future)) return false;
      }
    }
    if (std::popcount(avail) < t - 1 - i) return false;

    // Close first: dense hosts admit small branch sets.
    {
      const int saved_missing = missing_closed;
      bool feasible = true;
      for (int a = 0; a < i && feasible; ++a) {
        if ((nbr[a] & sets[i]) == 0) {
          if (family) ++missing_closed;
          else if (required->has_edge(a, i)) feasible = false;
        }
      }
      if (feasible && (!family || missing_closed <= budget_s)) {
        if (i == t - 1) return true;
        if (open_set(i + 1, avail)) return true;  // bans lift on close
        if (budget_hit) {
          missing_closed = saved_missing;
          return false;
        }
      }
      missing_closed = saved_missing;
    }

    // Growth, descending degree then ascending index.
    const uint64_t cands = avail & ~banned & nbr[i] & ~floor_[i];
    if (cands == 0) return false;
    const uint64_t saved_set = sets[i];
    const uint64_t saved_nbr = nbr[i];
    for (int idx = 0; idx < n; ++idx) {
      const int v = degree_order[idx];
      if (!((cands >> v) & 1)) continue;
      sets[i] = saved_set | (uint64_t{1} << v);
      nbr[i] = saved_nbr | g.row(v);
      if (extend_set(i, avail & ~(uint64_t{1} << v), banned)) return true;
      sets[i] = saved_set;
      nbr[i] = saved_nbr;
      if (budget_hit) return false;
      banned |= uint64_t{1} << v;
    }
    return false;
  }

  MinorModel model() const {
    MinorModel m;
    m.branch_sets.reserve(t);
    for (int i = 0; i < t; ++i) m.branch_sets.emplace_back(sets[i]);
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if ((nbr[a] & sets[b]) == 0) m.missing_pairs.emplace_back(a, b);
    return m;
  }
};

// Repeated contraction of the lowest-degree vertex into its highest-degree
// neighbor down to t blocks. A cheap shot at a positive before the search.
struct GreedyContraction {
  std::vector<uint64_t> blocks;  // original-vertex masks
  std::vector<uint64_t> rows;    // quotient adjacency between blocks
  bool stuck = false;

  GreedyContraction(const Graph& g, int t) {
    const int n = g.order();
    blocks.resize(n);
    rows.resize(n);
    for (int v = 0; v < n; ++v) {
      blocks[v] = uint64_t{1} << v;
      rows[v] = g.row(v);
    }
    while (static_cast<int>(blocks.size()) > t) {
      const int m = static_cast<int>(blocks.size());
      int v = -1, vdeg = 1 << 30;
      for (int i = 0; i < m; ++i) {
        const int d = std::popcount(rows[i]);
        if (d < vdeg) {
          vdeg = d;
          v = i;
        }
      }
      if (vdeg == 0) {
        stuck = true;
        return;
      }
      int u = -1, udeg = -1;
      for (int i = 0; i < m; ++i) {
        if (i == v || !((rows[v] >> i) & 1)) continue;
        const int d = std::popcount(rows[i]);
        if (d > udeg) {
          udeg = d;
          u = i;
        }
      }
      merge(u, v);
    }
  }

  void merge(int into, int from) {
    const int m = static_cast<int>(blocks.size());
    blocks[into] |= blocks[from];
    rows[into] |= rows[from];
    for (int i = 0; i < m; ++i)
      if ((rows[i] >> from) & 1) rows[i] |= uint64_t{1} << into;
    rows[into] &= ~((uint64_t{1} << into) | (uint64_t{1} << from));
    for (int i = 0; i < m; ++i) rows[i] &= ~(uint64_t{1} << from);
    blocks.erase(blocks.begin() + from);
    rows.erase(rows.begin() + from);
    // compact bit positions above `from`
    for (auto& r : rows) {
      const uint64_t low = r & ((uint64_t{1} << from) - 1);
      const uint64_t high = r >> (from + 1);
      r = low | (high << from);
    }
  }
};

std::optional<MinorModel> greedy_prepass(const Graph& g, const MinorTarget& target) {
  const int t = target.family_mode() ? target.t : target.target_graph->order();
  if (g.order() < t) return std::nullopt;
  GreedyContraction gc(g, t);
  if (gc.stuck || static_cast<int>(gc.blocks.size()) != t) return std::nullopt;

  // Stable model: blocks sorted by minimum original vertex.
  std::vector<int> order(t);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return VertexSet(gc.blocks[a]).min() < VertexSet(gc.blocks[b]).min();
  });
  auto block_adjacent = [&](int a, int b) { return ((gc.rows[order[a]] >> order[b]) & 1) != 0; };

  if (target.family_mode()) {
    MinorModel m;
    for (int i = 0; i < t; ++i) m.branch_sets.emplace_back(gc.blocks[order[i]]);
    for (int a = 0; a < t; ++a)
      for (int b = a + 1; b < t; ++b)
        if (!block_adjacent(a, b)) m.missing_pairs.emplace_back(a, b);
    if (static_cast<int>(m.missing_pairs.size()) > target.s) return std::nullopt;
    return m;
  }

  // Explicit mode: try the single degree-sorted assignment of target
  // vertices to blocks.
  const Graph& h = *target.target_graph;
  std::vector<int> horder(t), border(t);
  std::iota(horder.begin(), horder.end(), 0);
  std::iota(border.begin(), border.end(), 0);
  std::sort(horder.begin(), horder.end(), [&](int a, int b) {
    if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
    return a < b;
  });
  std::sort(border.begin(), border.end(), [&](int a, int b) {
    const int da = std::popcount(gc.rows[order[a]]);
    const int db = std::popcount(gc.rows[order[b]]);
    if (da != db) return da > db;
    return a < b;
  });
  std::vector<int> block_for(t);  // block_for[h vertex] = sorted-block index
  for (int i = 0; i < t; ++i) block_for[horder[i]] = border[i];
  for (auto [a, b] : h.edge_list())
    if (!block_adjacent(block_for[a], block_for[b])) return std::nullopt;

  MinorModel m;
  m.branch_sets.resize(t);
  for (int hv = 0; hv < t; ++hv) m.branch_sets[hv] = VertexSet(gc.blocks[order[block_for[hv]]]);
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b)
      if (!block_adjacent(block_for[a], block_for[b])) m.missing_pairs.emplace_back(a, b);
  return m;
}

}  // namespace

MinorTarget MinorTarget::family(int t, int s) {
  if (t < 1 || t > kMaxTargetOrder) throw std::invalid_argument("target order must be in 1..12");
  if (s < 0) throw std::invalid_argument("missing-edge budget must be nonnegative");
  MinorTarget target;
  target.t = t;
  target.s = s;
  return target;
}

MinorTarget MinorTarget::of_graph(Graph h) {
  if (h.order() < 1 || h.order() > kMaxTargetOrder)
    throw std::invalid_argument("target order must be in 1..12");
  MinorTarget target;
  target.t = h.order();
  target.s = 0;
  target.target_graph = std::move(h);
  return target;
}

std::string MinorTarget::describe() const {
  std::ostringstream out;
  if (family_mode())
    out << "family t=" << t << " s=" << s;
  else
    out << "graph " << to_graph6(*target_graph);
  return out.str();
}

bool family_edge_bound_rejects(const Graph& g, int t, int s) {
  if (g.order() < t) return true;
  const int needed = t * (t - 1) / 2 - s;
  return g.edge_count() < needed;
}

MinorCheck verify_model(const Graph& g, const MinorModel& model, const MinorTarget& target) {
  const int t = target.family_mode() ? target.t : target.target_graph->order();
  if (static_cast<int>(model.branch_sets.size()) != t) return {false, "branch set count"};
  const uint64_t range = VertexSet::first_n(g.order()).bits();
  uint64_t seen = 0;
  for (const VertexSet& bs : model.branch_sets) {
    if (bs.empty()) return {false, "empty branch set"};
    if (bs.bits() & ~range) return {false, "branch set out of range"};
    if (bs.bits() & seen) return {false, "disjointness"};
    seen |= bs.bits();
  }
  for (const VertexSet& bs : model.branch_sets)
    if (!is_connected(induced_subgraph(g, bs))) return {false, "connectivity"};

  auto adjacent = [&](int a, int b) {
    for (int v : model.branch_sets[a])
      if (g.row(v) & model.branch_sets[b].bits()) return true;
    return false;
  };
  std::vector<std::pair<int, int>> listed = model.missing_pairs;
  for (auto [a, b] : listed) {
    if (a < 0 || b < 0 || a >= t || b >= t || a >= b) return {false, "malformed missing pair"};
    if (adjacent(a, b)) return {false, "listed missing pair is adjacent"};
  }
  std::sort(listed.begin(), listed.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end())
    return {false, "duplicate missing pair"};
  for (int a = 0; a < t; ++a)
    for (int b = a + 1; b < t; ++b)
      if (!adjacent(a, b) && !std::binary_search(listed.begin(), listed.end(), std::make_pair(a, b)))
        return {false, "unlisted missing pair"};

  if (target.family_mode()) {
    if (static_cast<int>(model.missing_pairs.size()) > target.s)
      return {false, "missing pairs exceed budget"};
  } else {
    const Graph& h = *target.target_graph;
    for (auto [a, b] : h.edge_list())
      if (!adjacent(a, b)) return {false, "required adjacency absent"};
  }
  return {true, ""};
}

MinorSearchResult find_minor(const Graph& g, const MinorTarget& target, uint64_t max_nodes) {
  MinorSearchResult out;
  out.decided = true;

  const bool family = target.family_mode();
  const int t = family ? target.t : target.target_graph->order();

  if (family) {
    if (family_edge_bound_rejects(g, t, target.s)) return out;
  } else {
    const Graph& h = *target.target_graph;
    if (g.order() < h.order() || g.edge_count() < h.edge_count()) return out;
  }

  // A clique of size t hosts any target on t vertices as singletons.
  VertexSet clique = maximum_clique(g);
  if (clique.count() >= t) {
    MinorModel m;
    int taken = 0;
    for (int v : clique) {
      if (taken == t) break;
      m.branch_sets.emplace_back(VertexSet::single(v));
      ++taken;
    }
    out.model = std::move(m);
    return out;
  }

  if (auto m = greedy_prepass(g, target)) {
    if (verify_model(g, *m, target).ok) {
      out.model = std::move(m);
      return out;
    }
  }

  Graph reordered;
  std::vector<int> horder;
  const Graph* required = nullptr;
  if (!family) {
    const Graph& h = *target.target_graph;
    horder.resize(t);
    std::iota(horder.begin(), horder.end(), 0);
    std::sort(horder.begin(), horder.end(), [&](int a, int b) {
      if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
      return a < b;
    });
    reordered = permuted(h, horder);
    required = &reordered;
  }

  BranchSearch search(g, t, target.s, family, required, max_nodes);
  const bool found = search.open_set(0, g.vertices().bits());
  out.nodes = search.nodes;
  if (search.budget_hit) {
    out.decided = false;
    return out;
  }
  if (found) {
    MinorModel m = search.model();
    if (!family) {
      // Map branch sets back to the target's original vertex labels.
      MinorModel mapped;
      mapped.branch_sets.resize(t);
      for (int pos = 0; pos < t; ++pos) mapped.branch_sets[horder[pos]] = m.branch_sets[pos];
      for (auto [a, b] : m.missing_pairs) {
        int oa = horder[a];
        int ob = horder[b];
        if (oa > ob) std::swap(oa, ob);
        mapped.missing_pairs.emplace_back(oa, ob);
      }
      std::sort(mapped.missing_pairs.begin(), mapped.missing_pairs.end());
      m = std::move(mapped);
    }
    MinorCheck check = verify_model(g, m, target);
    if (!check.ok)
      throw std::logic_error("minor search produced an invalid model: " + check.diagnostic);
    out.model = std::move(m);
  }
  return out;
}

std::optional<MinorModel> find_family_minor(const Graph& g, int t, int s) {
  return find_minor(g, MinorTarget::family(t, s)).model;
}

std::optional<MinorModel> find_minor_of(const Graph& g, const Graph& h) {
  return find_minor(g, MinorTarget::of_graph(h)).model;
}

}  // namespace minorkit
