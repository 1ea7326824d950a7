#pragma once

// Order-3 automorphisms sigma_u built by propagating a 3-cycle across matched
// (Phi(u), Psi(u)) cell pairs, the normalized family {sigma_u}, related
// 4-sets, and the group generated by all sigma_u sigma_v^{-1}.

#include "dfsrg/exact.hpp"
#include "dfsrg/graph.hpp"
#include "dfsrg/params.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dfsrg {

/// Bijection on 0..size()-1. Composition reads right to left:
/// (a * b)(x) = a(b(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `images` is a bijection.
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  Vertex operator()(Vertex x) const { return images_[x]; }
  const std::vector<Vertex>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::size_t order() const;
  std::size_t fixed_points() const noexcept;

  /// Preserves adjacency and non-adjacency of every pair.
  bool is_automorphism_of(const Graph& g) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<Vertex> images_;
};

enum class Orientation { forward, backward };

enum class SigmaFailureKind {
  precondition,      // Phi(u) / Psi(u) missing, or a cell pair neither edgeless nor 1-regular
  conflict,          // a cell received two different definitions
  unreachable,       // propagation stalled with undefined cells
  not_automorphism,  // propagation finished but adjacency is not preserved
};

const char* to_string(SigmaFailureKind k);

struct SigmaFailure {
  SigmaFailureKind kind = SigmaFailureKind::precondition;
  std::string detail;
  std::vector<Vertex> witness;
};

struct SigmaResult {
  std::optional<Permutation> sigma;
  std::optional<SigmaFailure> failure;

  bool ok() const noexcept { return sigma.has_value(); }
};

/// Builds sigma_u: fixes u, cycles the seed Phi(u) cell (forward = ascending
/// 3-cycle a0 -> a1 -> a2 -> a0), and transfers the index permutation across
/// every 1-regular (phi, psi) pair until all cells are defined. The result is
/// always checked to be an automorphism. Throws PreconditionError only for a
/// seed index out of range or a vertex out of range.
SigmaResult build_sigma(const Graph& g, const FamilyInfo& fam, Vertex u, std::size_t seed_cell,
                        Orientation orientation);

/// sigma_u for every u, normalized by sigma_u(z) = sigma_z^{-1}(u); sigma_z
/// itself uses seed cell 0 with forward orientation.
struct SigmaFamily {
  Vertex base = 0;
  std::vector<Permutation> sigma;  // indexed by vertex
};

/// Throws StructureError if build_sigma fails at some vertex, and
/// std::runtime_error if the normalization is ambiguous or unsatisfiable.
SigmaFamily canonical_sigma_family(const Graph& g, const FamilyInfo& fam, Vertex z);

struct PairViolationReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::size_t violation_count = 0;
  std::optional<std::array<Vertex, 2>> witness;
};

/// sigma_u(v) == sigma_v^{-1}(u) for every ordered pair.
PairViolationReport verify_inverse_relation(const SigmaFamily& family);

/// (sigma_u sigma_v^{-1})^2 == id for every ordered pair.
PairViolationReport verify_involution_property(const SigmaFamily& family);

enum class RelatedKind { clique, independent };

struct RelatedSet {
  std::array<Vertex, 4> members{};  // ascending
  RelatedKind kind = RelatedKind::clique;
};

/// The related 4-set through x != y: the K4 through an edge, or {x, y} + M_0(x, y)
/// for a non-edge. Throws StructureError if the set is malformed or if two of
/// its members do not regenerate it.
RelatedSet related_set(const Graph& g, const FamilyInfo& fam, Vertex x, Vertex y);

struct RelatedPartitionReport {
  bool holds = true;
  std::size_t cliques = 0, independents = 0;
  std::size_t pairs_covered = 0;
  std::optional<std::string> failure;
  std::vector<Vertex> witness;
};

/// Every pair lies in exactly one related set.
RelatedPartitionReport related_partition(const Graph& g, const FamilyInfo& fam);

struct GroupClosure {
  std::vector<Permutation> generators;      // deduplicated, sorted
  std::vector<Permutation> elements;        // identity first, then BFS order
  std::vector<std::vector<Vertex>> orbits;  // sorted by smallest member
};

/// Closure under composition. Throws std::length_error once more than
/// `cap` elements are found.
GroupClosure generate_group(std::span<const Permutation> generators, std::size_t degree,
                            std::size_t cap = std::size_t{1} << 16);

struct GammaReport {
  GroupClosure group;
  bool abelian = false;
  bool transitive = false;
  bool order_is_power_of_two = false;
  std::map<std::size_t, std::size_t> element_orders;  // order -> count
  std::map<std::size_t, std::size_t> fixed_points;    // #fixed points -> count (non-identity)
  std::optional<exact::Rational> fixed_point_bound;  // absent for non-integral spectra
  bool within_fixed_point_bound = true;
};

/// Group generated by sigma_u sigma_v^{-1} over all u, v, with the checks the
/// structure theory predicts. `params` supplies the fixed point bound.
GammaReport generate_gamma(const SigmaFamily& family, const SrgParams& params,
                           std::size_t cap = std::size_t{1} << 16);

}  // namespace dfsrg
