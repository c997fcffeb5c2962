#pragma once

#include <optional>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

/// Injective mapping of pattern vertices to host vertices preserving
/// pattern edges (host may have extra edges). Returns map[pattern vertex] =
/// host vertex, or nullopt. With spanning=true the orders must match, i.e.
/// the pattern embeds as a spanning subgraph.
std::optional<std::vector<int>> find_subgraph_embedding(const Graph& host, const Graph& pattern,
                                                        bool spanning = false);

bool has_subgraph(const Graph& host, const Graph& pattern);
bool has_spanning_subgraph(const Graph& host, const Graph& pattern);

}  // namespace minorkit
