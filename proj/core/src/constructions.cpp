#include "minorkit/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "minorkit/canonical.hpp"
#include "minorkit/embed.hpp"
#include "minorkit/enumerate.hpp"
#include "minorkit/graph6.hpp"
#include "minorkit/stats.hpp"

namespace minorkit {

namespace {

std::vector<Graph> sorted_by_canonical_form(std::vector<Graph> graphs) {
  std::vector<std::pair<std::string, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (Graph& g : graphs) keyed.emplace_back(canonical_form(g).g6, std::move(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

// Automorphisms by brute force, usable for small bases only.
std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw std::invalid_argument("automorphism enumeration limited to 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (g.has_edge(i, j) != g.has_edge(perm[i], perm[j])) ok = false;
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

void collect_cliques(const Graph& g, int k, uint64_t chosen, int count, int next, uint64_t common,
                     std::vector<VertexSet>& out) {
  if (count == k) {
    out.emplace_back(chosen);
    return;
  }
  for (int v = next; v < g.order(); ++v) {
    if (count > 0 && !((common >> v) & 1)) continue;
    collect_cliques(g, k, chosen | (uint64_t{1} << v), count + 1, v + 1,
                    count == 0 ? g.row(v) : (common & g.row(v)), out);
  }
}

// Glues a fresh copy of `base` onto the host: host_clique vertices (ascending)
// are identified with copy_clique vertices in the order given by `image`
// (image[i] = base vertex identified with the i-th host clique vertex).
// Remaining base vertices are appended after the host.
Graph glue(const Graph& host, std::span<const int> host_clique, const Graph& base,
           std::span<const int> image) {
  const int k = static_cast<int>(host_clique.size());
  std::vector<int> base_to_new(base.order(), -1);
  for (int i = 0; i < k; ++i) base_to_new[image[i]] = host_clique[i];
  int next = host.order();
  for (int v = 0; v < base.order(); ++v)
    if (base_to_new[v] < 0) base_to_new[v] = next++;

  auto edges = host.edge_list();
  for (auto [u, v] : base.edge_list()) edges.emplace_back(base_to_new[u], base_to_new[v]);
  return Graph::from_edges(next, edges);
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

}  // namespace

Graph complete_minus(int t, MissingEdgePattern pattern) {
  std::vector<std::pair<int, int>> missing;
  switch (pattern) {
    case MissingEdgePattern::kOneEdge:
      if (t < 2) throw std::invalid_argument("pattern needs at least 2 vertices");
      missing = {{0, 1}};
      break;
    case MissingEdgePattern::kTwoIndependent:
      if (t < 4) throw std::invalid_argument("pattern needs at least 4 vertices");
      missing = {{0, 1}, {2, 3}};
      break;
    case MissingEdgePattern::kThreeIndependent:
      if (t < 6) throw std::invalid_argument("pattern needs at least 6 vertices");
      missing = {{0, 1}, {2, 3}, {4, 5}};
      break;
    case MissingEdgePattern::kTwoAdjacent:
      if (t < 3) throw std::invalid_argument("pattern needs at least 3 vertices");
      missing = {{0, 1}, {0, 2}};
      break;
  }
  return complete_minus(t, missing);
}

Graph complete_minus(int t, std::span<const std::pair<int, int>> missing) {
  Graph g = Graph::complete(t);
  for (auto [i, j] : missing) {
    if (i < 0 || j < 0 || i >= t || j >= t || i == j)
      throw std::invalid_argument("missing edge out of range");
    g = g.without_edge(i, j);
  }
  return g;
}

std::vector<Graph> family_members(int t, int s) {
  if (t < 1 || s < 0 || s > t * (t - 1) / 2)
    throw std::invalid_argument("family parameters out of range");
  // Complements of the s-edge graphs on t vertices.
  GraphFilter filter;
  filter.n = t;
  filter.min_edges = s;
  filter.max_edges = s;
  std::vector<Graph> members;
  for (const Graph& f : all_graphs(filter)) members.push_back(complement(f));
  return sorted_by_canonical_form(std::move(members));
}

std::vector<VertexSet> cliques_of_size(const Graph& g, int k) {
  std::vector<VertexSet> out;
  if (k < 1 || k > g.order()) return out;
  collect_cliques(g, k, 0, 0, 0, 0, out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
  return out;
}

Graph build_cockade(const CockadeSpec& spec) {
  if (spec.blocks < 1) throw std::invalid_argument("cockade needs at least one block");
  if (spec.k < 1 || spec.k > spec.base.order())
    throw std::invalid_argument("gluing clique size out of range");
  auto base_cliques = cliques_of_size(spec.base, spec.k);
  if (base_cliques.empty()) throw std::invalid_argument("base has no clique of the gluing size");
  const std::vector<int> copy_clique = base_cliques.front().to_vector();

  if (!spec.shape.empty() && static_cast<int>(spec.shape.size()) != spec.blocks - 1)
    throw std::invalid_argument("shape must name one gluing clique per added block");

  Graph g = spec.base;
  for (int step = 0; step + 1 < spec.blocks; ++step) {
    std::vector<int> host_clique;
    if (!spec.shape.empty()) {
      host_clique = spec.shape[step];
      std::sort(host_clique.begin(), host_clique.end());
      if (static_cast<int>(host_clique.size()) != spec.k)
        throw std::invalid_argument("shape step has the wrong clique size");
      for (int v : host_clique)
        if (v < 0 || v >= g.order()) throw std::invalid_argument("shape vertex out of range");
      if (!is_clique(g, host_clique)) throw std::invalid_argument("shape step is not a clique");
    } else {
      host_clique = cliques_of_size(g, spec.k).front().to_vector();
    }
    g = glue(g, host_clique, spec.base, copy_clique);
  }
  return g;
}

std::vector<Graph> all_cockades(const Graph& base, int k, int max_blocks) {
  if (max_blocks < 1 || max_blocks > 4) throw std::invalid_argument("block count must be in 1..4");
  if (k < 1 || cliques_of_size(base, k).empty())
    throw std::invalid_argument("base has no clique of the gluing size");

  // Copy-side choices up to base automorphism: orbit representatives of
  // (clique, identification order) pairs.
  std::vector<std::vector<int>> copy_choices;
  {
    auto auts = automorphisms(base);
    std::set<std::vector<int>> seen;
    for (VertexSet clique : cliques_of_size(base, k)) {
      std::vector<int> verts = clique.to_vector();
      std::sort(verts.begin(), verts.end());
      do {
        if (seen.count(verts)) continue;
        copy_choices.push_back(verts);
        for (const auto& a : auts) {
          std::vector<int> img(verts.size());
          for (size_t i = 0; i < verts.size(); ++i) img[i] = a[verts[i]];
          seen.insert(img);
        }
      } while (std::next_permutation(verts.begin(), verts.end()));
    }
  }

  std::vector<Graph> level = {base};
  std::map<std::string, Graph> all;
  all.emplace(canonical_form(base).g6, base);
  for (int blocks = 2; blocks <= max_blocks; ++blocks) {
    std::map<std::string, Graph> next;
    for (const Graph& host : level) {
      for (VertexSet host_clique : cliques_of_size(host, k)) {
        const std::vector<int> hc = host_clique.to_vector();
        for (const auto& image : copy_choices) {
          Graph glued = glue(host, hc, base, image);
          next.emplace(canonical_form(glued).g6, glued);
        }
      }
    }
    level.clear();
    for (auto& [key, g] : next) {
      level.push_back(g);
      all.emplace(key, g);
    }
  }

  std::vector<Graph> out;
  out.reserve(all.size());
  for (auto& [key, g] : all) out.push_back(std::move(g));
  return out;  // map order is canonical-form order
}

std::vector<Graph> derive_minimal_alpha2_family() {
  // Enumerated on the complement side: complements are triangle-free with
  // independence number at most 4, and edge-minimality here is saturation
  // there (every added edge closes a triangle).
  GraphFilter filter;
  filter.n = 9;
  filter.triangle_free = true;
  filter.independence_at_most = 4;

  std::vector<Graph> family;
  for (const Graph& c : all_graphs(filter)) {
    Graph h = complement(c);
    if (independence_number(h) != 2) continue;  // excludes the complete graph
    bool minimal = true;
    for (auto [u, v] : h.edge_list()) {
      if (independence_number(h.without_edge(u, v)) < 3) {
        minimal = false;
        break;
      }
    }
    if (minimal) family.push_back(h);
  }
  return sorted_by_canonical_form(std::move(family));
}

std::vector<TriplePattern> enumerate_triple_patterns() {
  std::vector<TriplePattern> out;
  for (int a = 0; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c)
        for (int t = 0; t <= a; ++t) {
          TriplePattern p{{a, b, c}, t};
          if (p.union_size() < 12) continue;

          // Explicit set system over the seven regions of the Venn diagram.
          // Region sizes from inclusion-exclusion; all must be nonnegative.
          const int only12 = a - t, only13 = b - t, only23 = c - t;
          const int x1 = 5 - only12 - only13 - t;
          const int x2 = 5 - only12 - only23 - t;
          const int x3 = 5 - only13 - only23 - t;
          if (x1 < 0 || x2 < 0 || x3 < 0) continue;

          std::set<int> l1, l2, l3;
          int next = 0;
          auto fill = [&](std::set<int>* s1, std::set<int>* s2, std::set<int>* s3, int count) {
            for (int i = 0; i < count; ++i, ++next) {
              if (s1) s1->insert(next);
              if (s2) s2->insert(next);
              if (s3) s3->insert(next);
            }
          };
          fill(&l1, nullptr, nullptr, x1);
          fill(nullptr, &l2, nullptr, x2);
          fill(nullptr, nullptr, &l3, x3);
          fill(&l1, &l2, nullptr, only12);
          fill(&l1, nullptr, &l3, only13);
          fill(nullptr, &l2, &l3, only23);
          fill(&l1, &l2, &l3, t);

          std::set<int> u12, u123;
          std::set_intersection(l1.begin(), l1.end(), l2.begin(), l2.end(),
                                std::inserter(u12, u12.begin()));
          std::set<int> all;
          all.insert(l1.begin(), l1.end());
          all.insert(l2.begin(), l2.end());
          all.insert(l3.begin(), l3.end());
          for (int v : u12)
            if (l3.count(v)) u123.insert(v);

          const bool realized = l1.size() == 5 && l2.size() == 5 && l3.size() == 5 &&
                                static_cast<int>(u12.size()) == a &&
                                static_cast<int>(u123.size()) == t &&
                                static_cast<int>(all.size()) == p.union_size() &&
                                l1 != l2 && l1 != l3 && l2 != l3;
          if (realized) out.push_back(p);
        }
  return out;
}

}  // namespace minorkit
