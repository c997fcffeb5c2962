#pragma once

// graph6 text encoding: order byte(s), then the upper triangle
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit groups,
// each group emitted as byte value+63. One graph per line.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

class Graph6Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Encodes without a trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line; trailing newline is tolerated. Strict:
/// rejects bad characters, wrong length and nonzero padding bits.
Graph from_graph6(std::string_view line);

std::vector<Graph> read_graph6_lines(std::string_view text);

}  // namespace minorkit
