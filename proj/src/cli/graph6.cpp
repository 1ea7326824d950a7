#include "dfsrg/cli/graph6.hpp"

#include <vector>

namespace dfsrg::cli {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr std::size_t kMaxOrder = (std::size_t{1} << 36) - 1;

bool is_data(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  std::size_t end = text.find('\n', pos);
  if (end == std::string_view::npos) end = text.size();
  while (end > pos && (text[end - 1] == '\r' || text[end - 1] == ' ' || text[end - 1] == '\t')) --end;
  if (pos == end) throw Graph6Error("empty graph6 record", pos);

  auto byte = [&](std::size_t i) -> unsigned {
    if (i >= end) throw Graph6Error("truncated graph6 record", i);
    if (!is_data(text[i])) throw Graph6Error("byte outside the graph6 range 63..126", i);
    return static_cast<unsigned>(text[i]) - 63;
  };

  std::size_t n = 0;
  if (text[pos] != '~') {
    n = byte(pos);
    pos += 1;
  } else if (pos + 1 < end && text[pos + 1] != '~') {
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | byte(pos + i);
    if (n < 63) throw Graph6Error("non-canonical length header", pos);
    pos += 4;
  } else {
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | byte(pos + i);
    if (n < 258048) throw Graph6Error("non-canonical length header", pos);
    pos += 8;
  }
  if (n > 1'000'000) throw Graph6Error("graph too large (" + std::to_string(n) + " vertices)", pos);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (end - pos != need) {
    throw Graph6Error("expected " + std::to_string(need) + " data bytes, found " + std::to_string(end - pos), pos);
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1u) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = byte(pos + need - 1);
    if (last & ((1u << (6 - bits % 6)) - 1)) throw Graph6Error("nonzero padding bits", pos + need - 1);
  }
  return Graph::from_edges(n, edges);
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxOrder) throw std::length_error("graph too large for graph6");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
  }
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

}  // namespace dfsrg::cli
