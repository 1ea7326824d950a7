#pragma once

#include "dfsrg/bitset.hpp"
#include "dfsrg/errors.hpp"
#include "dfsrg/params.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dfsrg {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple graph on vertices 0..order()-1 with one adjacency bitset
/// per vertex. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  /// Throws PreconditionError on self-loops or out-of-range endpoints.
  /// Duplicate edges are merged.
  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  /// Rows must form a symmetric, irreflexive square matrix.
  static Graph from_adjacency(const std::vector<std::vector<bool>>& matrix);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edges_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t common_neighbor_count(Vertex u, Vertex v) const { return intersect_count(rows_[u], rows_[v]); }

  std::vector<Edge> edges() const;

  /// Copy of this graph with adjacency of {u, v} flipped.
  Graph with_edge_toggled(Vertex u, Vertex v) const;

  /// Copy with vertex v removed; higher ids shift down by one.
  Graph without_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<Bitset> rows);

  std::vector<Bitset> rows_;
  std::size_t edges_ = 0;
};

/// Intersection of the open neighborhoods of `vs`, ascending.
std::vector<Vertex> common_neighbors(const Graph& g, std::span<const Vertex> vs);

/// Result of a pair-by-pair strong regularity check. On failure `reason`
/// explains and `witness` holds the offending vertex or pair.
struct SrgCheck {
  std::optional<SrgParams> params;
  std::string reason;
  std::vector<Vertex> witness;
};

SrgCheck check_srg(const Graph& g);

/// Parameters (nu, k, lambda, mu) iff g is a nontrivial strongly regular graph.
std::optional<SrgParams> is_srg(const Graph& g);

struct DiamondCheck {
  bool diamond_free = true;
  /// Induced diamond {apex, x, y, z}: apex ~ x, y, z; x ~ y, x ~ z; y !~ z.
  std::optional<std::array<Vertex, 4>> witness;
};

/// Every vertex neighborhood must be a disjoint union of cliques.
DiamondCheck is_diamond_free(const Graph& g);

enum class PartitionKind { phi, psi };

/// Partition of a vertex subset into labelled 3-sets around `base`. Cells are
/// sorted internally and ordered by their smallest element.
struct TriplePartition {
  Vertex base = 0;
  PartitionKind kind = PartitionKind::phi;
  std::vector<std::array<Vertex, 3>> cells;
};

/// Components of <N(u)>, each of which must be a clique (otherwise
/// StructureError with the non-clique component). Canonical order.
std::vector<std::vector<Vertex>> neighborhood_cliques(const Graph& g, Vertex u);

/// Partition of N(u) into triangles; StructureError if some component of
/// <N(u)> is not a triangle.
TriplePartition phi_partition(const Graph& g, Vertex u);

/// For each edge, {endpoints} + their common neighbors; deduplicated and
/// sorted. StructureError if some closure is not a clique.
std::vector<std::vector<Vertex>> maximal_cliques_via_edges(const Graph& g);

}  // namespace dfsrg
