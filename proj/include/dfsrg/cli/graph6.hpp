#pragma once

#include "dfsrg/graph.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace dfsrg::cli {

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; anything after the first line is ignored.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding, without header or newline.
std::string serialize_graph6(const Graph& g);

}  // namespace dfsrg::cli
