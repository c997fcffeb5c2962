#include "minorkit/graph6.hpp"

namespace minorkit {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    // long form: '~' then 18 bits of n, big-endian in 6-bit groups
    out.push_back(126);
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int group = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (group << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw Graph6Error("empty graph6 line");

  size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= line.size()) throw Graph6Error("graph6 line truncated");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw Graph6Error("invalid graph6 character");
    return c - 63;
  };

  int n;
  if (static_cast<unsigned char>(line[0]) == 126) {
    ++pos;
    if (pos + 3 > line.size()) throw Graph6Error("graph6 line truncated");
    if (static_cast<unsigned char>(line[pos]) == 126) throw Graph6Error("graph6 order beyond 64 vertices");
    int a = next(), b = next(), c = next();
    n = (a << 12) | (b << 6) | c;
  } else {
    n = next();
  }
  if (n > kMaxVertices) throw Graph6Error("graph6 order beyond 64 vertices");

  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  const long groups = (pairs + 5) / 6;
  if (static_cast<long>(line.size() - pos) != groups) throw Graph6Error("graph6 data length mismatch");

  std::array<uint64_t, kMaxVertices> rows{};
  long bit = 0;
  int group = 0;
  int avail = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        group = next();
        avail = 6;
      }
      if ((group >> (avail - 1)) & 1) {
        rows[i] |= uint64_t{1} << j;
        rows[j] |= uint64_t{1} << i;
      }
      --avail;
      ++bit;
    }
  }
  if (avail > 0 && (group & ((1 << avail) - 1)) != 0) throw Graph6Error("nonzero graph6 padding bits");
  (void)bit;
  return Graph::from_rows(n, std::span<const uint64_t>(rows.data(), static_cast<size_t>(n)));
}

std::vector<Graph> read_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line != "\r") out.push_back(from_graph6(line));
    start = end + 1;
  }
  return out;
}

}  // namespace minorkit
