#pragma once

#include <compare>
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// graph6 encoding of the canonically relabeled graph.
/// Equal bytes iff the underlying graphs are isomorphic.
struct CanonicalForm {
  std::string g6;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);

/// The canonically relabeled graph itself.
Graph canonical_graph(const Graph& g);

/// order[pos] = original vertex placed at canonical position pos.
std::vector<int> canonical_order(const Graph& g);

/// True iff the identity labeling already realizes the canonical form,
/// i.e. no relabeling yields a lexicographically smaller upper-triangle
/// bit string. Cheaper than canonical_form on most negatives.
bool is_canonically_labeled(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace minorkit
