#pragma once

#include "dfsrg/graph.hpp"
#include "dfsrg/params.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dfsrg {

/// Points 0..num_points-1 and lines given as point sets. Each line is stored
/// sorted; line order is preserved. The constructor rejects out-of-range ids,
/// repeated points within a line, and duplicate lines.
class IncidenceStructure {
 public:
  IncidenceStructure(std::size_t num_points, std::vector<std::vector<std::size_t>> lines);

  std::size_t num_points() const noexcept { return num_points_; }
  std::size_t num_lines() const noexcept { return lines_.size(); }
  const std::vector<std::vector<std::size_t>>& lines() const noexcept { return lines_; }

 private:
  std::size_t num_points_;
  std::vector<std::vector<std::size_t>> lines_;
};

struct PqAxiomReport {
  std::optional<PqParams> params;  // set iff all four axioms hold
  bool generalized_quadrangle = false;
  int violated_axiom = 0;          // 1..4 on failure
  std::string detail;
  std::vector<std::size_t> witness_points;
  std::vector<std::size_t> witness_lines;
};

/// Checks the four partial-quadrangle axioms with constant s, t, mu and
/// reports the first violation.
PqAxiomReport verify_pq_axioms(const IncidenceStructure& inc);

/// Points adjacent iff they share a line.
Graph collinearity_graph(const IncidenceStructure& inc);

/// Points are the vertices and lines the maximal cliques. Throws
/// PreconditionError if g is not a diamond-free strongly regular graph.
IncidenceStructure graph_to_pq(const Graph& g);

/// GF(4) = {0, 1, w, w^2} encoded as 0, 1, 2, 3; addition is XOR and
/// w^2 = w + 1.
class GF4 {
 public:
  constexpr GF4() = default;
  constexpr explicit GF4(std::uint8_t v) : v_(v & 3u) {}

  static constexpr GF4 zero() { return GF4(0); }
  static constexpr GF4 one() { return GF4(1); }
  static constexpr GF4 omega() { return GF4(2); }

  constexpr std::uint8_t value() const { return v_; }

  friend constexpr GF4 operator+(GF4 a, GF4 b) { return GF4(static_cast<std::uint8_t>(a.v_ ^ b.v_)); }
  friend constexpr GF4 operator-(GF4 a, GF4 b) { return a + b; }
  friend constexpr GF4 operator*(GF4 a, GF4 b) {
    constexpr std::uint8_t table[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    return GF4(table[a.v_][b.v_]);
  }
  /// Multiplicative inverse; the inverse of 0 is reported as 0.
  constexpr GF4 inverse() const {
    constexpr std::uint8_t table[4] = {0, 1, 3, 2};
    return GF4(table[v_]);
  }
  friend constexpr bool operator==(GF4, GF4) = default;

 private:
  std::uint8_t v_ = 0;
};

using GF4Vector3 = std::array<GF4, 3>;

/// Vertex id of (x0, x1, x2) in the GQ(3,5) Cayley graph: x0 + 4 x1 + 16 x2.
/// Vector addition corresponds to XOR of ids.
Vertex gf4_vector_id(const GF4Vector3& x);
GF4Vector3 gf4_vector_from_id(Vertex id);

/// The hyperoval {(1,c,c^2)} + {(0,1,0), (0,0,1)} of PG(2,4), each point
/// normalized with leading coordinate 1.
std::vector<GF4Vector3> gq35_hyperoval();

/// Nonzero scalar multiples of the hyperoval points (18 vectors), as ids.
std::vector<Vertex> gq35_connection_set();

/// 4x4 rook graph; vertex (i, j) has id 4i + j.
Graph build_rook4();

/// Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)};
/// vertex (i, j) has id 4i + j.
Graph build_shrikhande();

/// Collinearity graph of GQ(3,5) as a Cayley graph on GF(4)^3 whose
/// connection set is the 18 nonzero vectors with direction in the hyperoval.
/// Throws std::logic_error if the hyperoval self-check fails.
Graph build_gq35();

}  // namespace dfsrg
