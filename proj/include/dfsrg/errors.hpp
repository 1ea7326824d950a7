#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dfsrg {

using Vertex = std::uint32_t;

/// Raised when a caller violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a graph does not have the local structure an operation needs
/// (e.g. a neighborhood that is not a union of triangles). Carries the
/// vertices that exhibit the problem.
class StructureError : public std::runtime_error {
 public:
  StructureError(const std::string& what, std::vector<Vertex> witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

}  // namespace dfsrg
