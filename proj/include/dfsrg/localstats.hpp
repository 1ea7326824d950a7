#pragma once

// Local statistics around a base vertex u of a family member: the triple
// counts p_u / q_u, the m_i spectrum, condition (con), the Psi(u) partition,
// matched cell pairs, and exact checks of the block inverse of nI - A_H and
// of the identity nI - X = Y (nI - A_H)^{-1} Y^T.

#include "dfsrg/exact.hpp"
#include "dfsrg/graph.hpp"
#include "dfsrg/params.hpp"
#include "dfsrg/report.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dfsrg {

struct PairStats {
  Vertex u = 0, v = 0, w = 0;
  std::size_t p = 0;  // |N(u, v, w)|
  std::size_t q = 0;  // #{(x, y) : x in N(u,v), y in N(u,w), x ~ y}
};

/// Requires v, w outside N[u] and v != w.
PairStats pair_stats(const Graph& g, Vertex u, Vertex v, Vertex w);

struct EqPqViolation {
  Vertex u = 0, v = 0, w = 0;
  bool adjacent = false;
  std::size_t p = 0, q = 0;
  std::int64_t lhs = 0;       // (n - lambda + 1) p + q
  std::int64_t expected = 0;  // lambda (n+1) if v ~ w, else mu
};

struct EqPqReport {
  bool holds = true;
  std::size_t triples_checked = 0;
  std::optional<EqPqViolation> counterexample;
};

/// Checks (n-lambda+1) p_u(v,w) + q_u(v,w) against lambda(n+1) / mu for every
/// u and every unordered pair v, w outside N[u]. Requires lambda <= n and
/// that the family describes a graph of g's order.
EqPqReport verify_eq_pq(const Graph& g, const FamilyInfo& fam);

struct MSpectrum {
  Vertex u = 0, v = 0;
  std::int64_t t = 0;                 // floor(mu / (n - lambda + 1))
  std::vector<std::size_t> counts;    // counts[i] = m_i(u, v), 0 <= i <= t
  std::vector<Vertex> m0_witnesses;   // M_0(u, v), ascending
  std::array<std::int64_t, 3> moments{};   // sum m_i, sum i m_i, sum C(i,2) m_i
  std::array<std::int64_t, 3> expected{};  // nu-2k+mu-2, mu(k-2l-2), (mu-2) C(mu,2)
  bool identities_hold = false;
};

/// m_i distribution for a non-adjacent pair. Requires n - lambda + 1 > 0.
/// Throws StructureError if some p_u(v, x) exceeds t.
MSpectrum m_spectrum(const Graph& g, const FamilyInfo& fam, Vertex u, Vertex v);

/// M_0(u, v): vertices outside N[u] and N[v] with no common neighbor with both.
std::vector<Vertex> m0_set(const Graph& g, Vertex u, Vertex v);

/// The unique m_i solution for lambda = 2 family members (n >= 2), indexed
/// 0..t like MSpectrum::counts.
std::vector<std::size_t> uniq_m_spectrum(const FamilyInfo& fam);

struct ConReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::size_t min_m0 = 0, max_m0 = 0;
  std::optional<std::array<Vertex, 2>> witness;  // a pair with m_0 = 0
};

/// m_0(u, v) >= 1 for every non-adjacent pair. Requires the family to
/// describe a graph of g's order.
ConReport check_condition_con(const Graph& g, const FamilyInfo& fam);

/// Partition of the non-neighbors of u into cells {v} + M_0(u, v). Throws
/// StructureError naming the offending vertex if some m_0 is not 2 or the
/// cells are not mutual, disjoint, independent with pairwise p_u = 0.
TriplePartition psi_partition(const Graph& g, const FamilyInfo& fam, Vertex u);

enum class MatchKind { edgeless, one_regular, other };

const char* to_string(MatchKind k);

struct CellMatch {
  MatchKind kind = MatchKind::edgeless;
  std::size_t edges = 0;
  /// For one_regular: phi position i is adjacent to psi position bijection[i].
  std::array<std::uint8_t, 3> bijection{};
};

struct MatchingTable {
  Vertex base = 0;
  std::size_t phi_cells = 0, psi_cells = 0;
  std::vector<CellMatch> entries;                // row-major, phi x psi
  std::vector<std::size_t> psi_matched_degree;   // # matched phi cells per psi cell
  std::size_t other_count = 0;

  const CellMatch& at(std::size_t phi, std::size_t psi) const { return entries[phi * psi_cells + psi]; }
};

/// Classifies every (phi, psi) cell pair. Both partitions must belong to u
/// (PreconditionError otherwise).
MatchingTable matched_pairs(const Graph& g, Vertex u, const TriplePartition& phi, const TriplePartition& psi);

struct PsiRegularityViolation {
  std::size_t psi_a = 0, psi_b = 0;
  std::string detail;
};

struct PsiRegularityReport {
  Severity severity = Severity::diagnostic;
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::map<int, std::size_t> r_distribution;  // r -> #cell pairs; -1 = not regular
  std::size_t violation_count = 0;
  std::vector<PsiRegularityViolation> violations;  // first few
};

/// For every two distinct Psi(u) cells: <psi, psi'> is r-regular with r in
/// {0,1,2}, p_u(v,w) = max(0, r-1) for v ~ w and n + r otherwise. Asserted only
/// for lambda = 2, n >= 3.
PsiRegularityReport verify_psi_regularity(const Graph& g, const FamilyInfo& fam, Vertex u);

/// N[u] ordered for the block inverse: position i*s + a holds the i-th vertex
/// of the a-th clique of N(u) (so the clique blocks follow the Kronecker shape
/// (.)(x) I_s), and u is last.
std::vector<Vertex> canonical_h_ordering(const Graph& g, const FamilyInfo& fam, Vertex u);

/// D (nI - A_H)^{-1} in closed form, D = n(n+1)^2(n-lambda), for s cliques of
/// size lambda+1 around u, in canonical_h_ordering positions.
exact::RationalMatrix scaled_h_inverse(const FamilyInfo& fam, std::size_t cliques);

struct MatrixDiscrepancy {
  std::size_t row = 0, col = 0;
  std::string expected, actual;
};

struct InvReport {
  bool holds = true;               // (nI - A_H) * closed form == D I
  bool matches_elimination = true; // closed form == D * Gauss-Jordan inverse
  bool degenerate = false;          // lambda = n: D = 0, nI - A_H singular
  std::vector<Vertex> ordering;
  std::optional<MatrixDiscrepancy> discrepancy;
};

/// Requires 0 <= lambda <= n and <N(u)> a union of cliques of size lambda+1.
/// At lambda = n both sides vanish after clearing D and the report is flagged
/// degenerate.
InvReport verify_inv_formula(const Graph& g, const FamilyInfo& fam, Vertex u);

/// Same with an explicit ordering of N[u].
InvReport verify_inv_formula(const Graph& g, const FamilyInfo& fam, Vertex u, const std::vector<Vertex>& ordering);

struct StarDiscrepancy {
  Vertex v = 0, w = 0;
  std::string expected;  // (nI - X)_{vw}
  std::string actual;    // (Y (nI - A_H)^{-1} Y^T)_{vw}
};

struct StarReport {
  bool holds = true;
  bool degenerate = false;  // lambda = n: only D (nI - X) = Y D(nI - A_H)^{-1} Y^T = 0 is checked
  std::size_t entries_checked = 0;
  std::optional<StarDiscrepancy> discrepancy;
};

/// Rows/columns ordered N-bar(u) ascending then canonical_h_ordering. Exact;
/// computed over the integers with the common denominator D cleared, so
/// lambda = n is accepted (degenerate, D = 0).
StarReport verify_star(const Graph& g, const FamilyInfo& fam, Vertex u);

}  // namespace dfsrg
