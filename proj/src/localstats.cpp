#include "dfsrg/localstats.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>

namespace dfsrg {

using exact::Rational;
using exact::RationalMatrix;

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

SrgParams require_order(const Graph& g, const FamilyInfo& fam, const char* op) {
  const SrgParams p = fam.params();
  if (static_cast<std::size_t>(p.nu()) != g.order()) {
    throw PreconditionError(std::string(op) + ": family (n=" + std::to_string(fam.n) + ", lambda=" +
                            std::to_string(fam.lambda) + ") has " + std::to_string(p.nu()) +
                            " vertices but the graph has " + std::to_string(g.order()));
  }
  return p;
}

// The derivations assume lambda <= n-1; lambda = n is admitted so the
// denominator-cleared identities can still be checked (D = 0 there).
void require_lambda_at_most_n(const FamilyInfo& fam, const char* op) {
  if (fam.lambda < 0 || fam.lambda > fam.n) {
    throw PreconditionError(std::string(op) + ": needs 0 <= lambda <= n (n=" + std::to_string(fam.n) +
                            ", lambda=" + std::to_string(fam.lambda) + ")");
  }
}

Bitset closed_neighborhood(const Graph& g, Vertex u) {
  Bitset b = g.neighbors(u);
  b.set(u);
  return b;
}

/// Vertices outside N[u], ascending.
std::vector<Vertex> non_neighbors(const Graph& g, Vertex u) {
  const Bitset closed = closed_neighborhood(g, u);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!closed.test(x)) out.push_back(x);
  }
  return out;
}

std::size_t cross_adjacent_pairs(const Graph& g, const Bitset& a, const Bitset& b) {
  std::size_t q = 0;
  a.for_each([&](std::size_t x) { q += intersect_count(g.neighbors(static_cast<Vertex>(x)), b); });
  return q;
}

std::string vertex_list(std::span<const Vertex> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

}  // namespace

PairStats pair_stats(const Graph& g, Vertex u, Vertex v, Vertex w) {
  require_vertex(g, u);
  require_vertex(g, v);
  require_vertex(g, w);
  if (v == w) throw PreconditionError("pair_stats: v and w must differ");
  if (v == u || w == u || g.adjacent(u, v) || g.adjacent(u, w)) {
    throw PreconditionError("pair_stats: v and w must lie outside N[u]");
  }
  const Bitset a = g.neighbors(u) & g.neighbors(v);
  const Bitset b = g.neighbors(u) & g.neighbors(w);
  return PairStats{u, v, w, intersect_count(a, b), cross_adjacent_pairs(g, a, b)};
}

EqPqReport verify_eq_pq(const Graph& g, const FamilyInfo& fam) {
  const SrgParams p = require_order(g, fam, "verify_eq_pq");
  require_lambda_at_most_n(fam, "verify_eq_pq");
  const std::int64_t weight = fam.n - fam.lambda + 1;
  const std::int64_t if_adjacent = fam.lambda * (fam.n + 1);
  const std::int64_t otherwise = p.mu();

  EqPqReport out;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nbar = non_neighbors(g, u);
    std::vector<Bitset> common;
    common.reserve(nbar.size());
    for (Vertex v : nbar) common.push_back(g.neighbors(u) & g.neighbors(v));
    for (std::size_t i = 0; i < nbar.size(); ++i) {
      for (std::size_t j = i + 1; j < nbar.size(); ++j) {
        ++out.triples_checked;
        const auto pp = intersect_count(common[i], common[j]);
        const auto qq = cross_adjacent_pairs(g, common[i], common[j]);
        const bool adj = g.adjacent(nbar[i], nbar[j]);
        const std::int64_t lhs = weight * static_cast<std::int64_t>(pp) + static_cast<std::int64_t>(qq);
        const std::int64_t expected = adj ? if_adjacent : otherwise;
        if (lhs != expected && out.holds) {
          out.holds = false;
          out.counterexample = EqPqViolation{u, nbar[i], nbar[j], adj, pp, qq, lhs, expected};
        }
      }
    }
  }
  return out;
}

std::vector<Vertex> m0_set(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  const Bitset common = g.neighbors(u) & g.neighbors(v);
  Bitset outside = closed_neighborhood(g, u) | closed_neighborhood(g, v);
  std::vector<Vertex> out;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (!outside.test(x) && intersect_count(common, g.neighbors(x)) == 0) out.push_back(x);
  }
  return out;
}

MSpectrum m_spectrum(const Graph& g, const FamilyInfo& fam, Vertex u, Vertex v) {
  const SrgParams p = fam.params();
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v || g.adjacent(u, v)) throw PreconditionError("m_spectrum: u and v must be distinct and non-adjacent");
  const std::int64_t weight = fam.n - fam.lambda + 1;
  if (weight <= 0) throw PreconditionError("m_spectrum: needs n - lambda + 1 > 0");

  MSpectrum out;
  out.u = u;
  out.v = v;
  out.t = p.mu() / weight;
  out.counts.assign(static_cast<std::size_t>(out.t) + 1, 0);
  const Bitset common = g.neighbors(u) & g.neighbors(v);
  const Bitset outside = closed_neighborhood(g, u) | closed_neighborhood(g, v);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (outside.test(x)) continue;
    const std::size_t i = intersect_count(common, g.neighbors(x));
    if (static_cast<std::int64_t>(i) > out.t) {
      throw StructureError("p_" + std::to_string(u) + "(" + std::to_string(v) + "," + std::to_string(x) +
                               ") = " + std::to_string(i) + " exceeds t = " + std::to_string(out.t),
                           {u, v, x});
    }
    ++out.counts[i];
    if (i == 0) out.m0_witnesses.push_back(x);
  }
  for (std::size_t i = 0; i < out.counts.size(); ++i) {
    const auto m = static_cast<std::int64_t>(out.counts[i]);
    const auto ii = static_cast<std::int64_t>(i);
    out.moments[0] += m;
    out.moments[1] += ii * m;
    out.moments[2] += ii * (ii - 1) / 2 * m;
  }
  const std::int64_t nu = p.nu(), k = p.k(), lambda = p.lambda(), mu = p.mu();
  out.expected = {nu - 2 * k + mu - 2, mu * (k - 2 * lambda - 2), (mu - 2) * (mu * (mu - 1) / 2)};
  out.identities_hold = out.moments == out.expected;
  return out;
}

std::vector<std::size_t> uniq_m_spectrum(const FamilyInfo& fam) {
  if (fam.lambda != 2 || fam.n < 2) throw PreconditionError("uniq_m_spectrum: needs lambda = 2 and n >= 2");
  const SrgParams p = fam.params();
  const std::int64_t n = fam.n;
  const std::int64_t t = p.mu() / (n - 1);
  std::vector<std::size_t> out(static_cast<std::size_t>(t) + 1, 0);
  auto put = [&](std::int64_t i, std::int64_t value) { out[static_cast<std::size_t>(i)] += static_cast<std::size_t>(value); };
  put(0, 2);
  put(n, n * (n + 2) * (n * n - 1));
  put(n + 1, 2 * n * (n * n - 4));
  put(n + 2, n * (n + 1));
  return out;
}

ConReport check_condition_con(const Graph& g, const FamilyInfo& fam) {
  require_order(g, fam, "check_condition_con");
  ConReport out;
  out.min_m0 = std::numeric_limits<std::size_t>::max();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) continue;
      const std::size_t m0 = m0_set(g, u, v).size();
      ++out.pairs_checked;
      out.min_m0 = std::min(out.min_m0, m0);
      out.max_m0 = std::max(out.max_m0, m0);
      if (m0 == 0 && out.holds) {
        out.holds = false;
        out.witness = std::array<Vertex, 2>{u, v};
      }
    }
  }
  if (out.pairs_checked == 0) out.min_m0 = 0;
  return out;
}

TriplePartition psi_partition(const Graph& g, const FamilyInfo& fam, Vertex u) {
  require_order(g, fam, "psi_partition");
  require_vertex(g, u);
  const auto nbar = non_neighbors(g, u);
  std::vector<std::array<Vertex, 3>> cell_of(g.order());
  for (Vertex v : nbar) {
    const auto m0 = m0_set(g, u, v);
    if (m0.size() != 2) {
      std::vector<Vertex> w{v};
      w.insert(w.end(), m0.begin(), m0.end());
      throw StructureError("not a partition: m_0(" + std::to_string(u) + "," + std::to_string(v) + ") = " +
                               std::to_string(m0.size()) + ", expected 2",
                           w);
    }
    std::array<Vertex, 3> cell{v, m0[0], m0[1]};
    std::sort(cell.begin(), cell.end());
    cell_of[v] = cell;
  }
  const Bitset& nu = g.neighbors(u);
  std::set<std::array<Vertex, 3>> cells;
  for (Vertex v : nbar) {
    const auto& cell = cell_of[v];
    for (Vertex a : cell) {
      if (cell_of[a] != cell) {
        throw StructureError("not a partition: " + std::to_string(a) + " is in the cell of " + std::to_string(v) +
                                 " but its own cell is " + vertex_list(cell_of[a]),
                             {v, a});
      }
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (g.adjacent(cell[i], cell[j])) {
          throw StructureError("not a partition: cell " + vertex_list(cell) + " is not independent",
                               {cell[i], cell[j]});
        }
        if (intersect_count(nu, g.neighbors(cell[i]), g.neighbors(cell[j])) != 0) {
          throw StructureError("not a partition: p_u is nonzero inside cell " + vertex_list(cell),
                               {cell[i], cell[j]});
        }
      }
    }
    cells.insert(cell);
  }
  return TriplePartition{u, PartitionKind::psi, {cells.begin(), cells.end()}};
}

const char* to_string(MatchKind k) {
  switch (k) {
    case MatchKind::edgeless: return "edgeless";
    case MatchKind::one_regular: return "1-regular";
    case MatchKind::other: return "other";
  }
  return "?";
}

MatchingTable matched_pairs(const Graph& g, Vertex u, const TriplePartition& phi, const TriplePartition& psi) {
  if (phi.kind != PartitionKind::phi || psi.kind != PartitionKind::psi) {
    throw PreconditionError("matched_pairs: expected a phi partition and a psi partition");
  }
  if (phi.base != u || psi.base != u) {
    throw PreconditionError("matched_pairs: partitions belong to vertices " + std::to_string(phi.base) + " and " +
                            std::to_string(psi.base) + ", not " + std::to_string(u));
  }
  MatchingTable out;
  out.base = u;
  out.phi_cells = phi.cells.size();
  out.psi_cells = psi.cells.size();
  out.entries.resize(out.phi_cells * out.psi_cells);
  out.psi_matched_degree.assign(out.psi_cells, 0);
  for (std::size_t i = 0; i < out.phi_cells; ++i) {
    for (std::size_t j = 0; j < out.psi_cells; ++j) {
      CellMatch& m = out.entries[i * out.psi_cells + j];
      std::array<int, 3> row_deg{}, col_deg{};
      for (std::uint8_t a = 0; a < 3; ++a) {
        for (std::uint8_t b = 0; b < 3; ++b) {
          if (g.adjacent(phi.cells[i][a], psi.cells[j][b])) {
            ++m.edges;
            ++row_deg[a];
            ++col_deg[b];
            m.bijection[a] = b;
          }
        }
      }
      if (m.edges == 0) {
        m.kind = MatchKind::edgeless;
      } else if (m.edges == 3 && row_deg == std::array<int, 3>{1, 1, 1} && col_deg == std::array<int, 3>{1, 1, 1}) {
        m.kind = MatchKind::one_regular;
        ++out.psi_matched_degree[j];
      } else {
        m.kind = MatchKind::other;
        ++out.other_count;
      }
      if (m.kind != MatchKind::one_regular) m.bijection = {};
    }
  }
  return out;
}

PsiRegularityReport verify_psi_regularity(const Graph& g, const FamilyInfo& fam, Vertex u) {
  const TriplePartition psi = psi_partition(g, fam, u);
  const Bitset& nu = g.neighbors(u);
  PsiRegularityReport out;
  out.severity = lemma_severity(fam);
  auto violate = [&](std::size_t a, std::size_t b, std::string detail) {
    out.holds = false;
    ++out.violation_count;
    if (out.violations.size() < 20) out.violations.push_back({a, b, std::move(detail)});
  };
  for (std::size_t a = 0; a < psi.cells.size(); ++a) {
    for (std::size_t b = a + 1; b < psi.cells.size(); ++b) {
      ++out.pairs_checked;
      const auto& ca = psi.cells[a];
      const auto& cb = psi.cells[b];
      std::array<int, 3> deg_a{}, deg_b{};
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (g.adjacent(ca[i], cb[j])) {
            ++deg_a[i];
            ++deg_b[j];
          }
        }
      }
      const int r = deg_a[0];
      const bool regular = std::all_of(deg_a.begin(), deg_a.end(), [&](int d) { return d == r; }) &&
                           std::all_of(deg_b.begin(), deg_b.end(), [&](int d) { return d == r; });
      ++out.r_distribution[regular ? r : -1];
      if (!regular) {
        violate(a, b, "cell pair is not regular");
        continue;
      }
      if (r > 2) {
        violate(a, b, "cell pair is " + std::to_string(r) + "-regular");
        continue;
      }
      for (Vertex v : ca) {
        for (Vertex w : cb) {
          const auto p = static_cast<std::int64_t>(intersect_count(nu, g.neighbors(v), g.neighbors(w)));
          const std::int64_t expected = g.adjacent(v, w) ? std::max(0, r - 1) : fam.n + r;
          if (p != expected) {
            violate(a, b, "p_u(" + std::to_string(v) + "," + std::to_string(w) + ") = " + std::to_string(p) +
                              ", expected " + std::to_string(expected) + " for r = " + std::to_string(r));
          }
        }
      }
    }
  }
  return out;
}

std::vector<Vertex> canonical_h_ordering(const Graph& g, const FamilyInfo& fam, Vertex u) {
  require_vertex(g, u);
  const auto cells = neighborhood_cliques(g, u);
  const auto size = static_cast<std::size_t>(fam.lambda + 1);
  for (const auto& c : cells) {
    if (c.size() != size) {
      throw StructureError("N(" + std::to_string(u) + ") has a clique of size " + std::to_string(c.size()) +
                               ", expected " + std::to_string(size),
                           c);
    }
  }
  std::vector<Vertex> order;
  order.reserve(cells.size() * size + 1);
  for (std::size_t i = 0; i < size; ++i) {
    for (const auto& c : cells) order.push_back(c[i]);
  }
  order.push_back(u);
  return order;
}

RationalMatrix scaled_h_inverse(const FamilyInfo& fam, std::size_t cliques) {
  const SrgParams p = fam.params();
  const std::int64_t n = fam.n, lambda = fam.lambda, mu = p.mu();
  const auto size = static_cast<std::size_t>(lambda + 1);
  const std::size_t k = cliques * size;
  const std::int64_t a = mu * (n - lambda);
  const std::int64_t b = lambda + 1 - n;
  const std::int64_t c = (lambda + 1 - n) * (n + 1 - lambda);
  RationalMatrix m(k + 1, k + 1);
  for (std::size_t r = 0; r <= k; ++r) {
    for (std::size_t col = 0; col <= k; ++col) {
      std::int64_t value = 0;
      if (r < k && col < k) {
        // ((aI + mu J) (x) I_s)_{(i,alpha),(j,beta)} = (a [i=j] + mu) [alpha=beta]
        if (r % cliques == col % cliques) value = (r == col ? a : 0) + mu;
      } else if (r == k && col == k) {
        value = c;
      } else {
        value = b;
      }
      m(r, col) = value - 1;
    }
  }
  return m;
}

InvReport verify_inv_formula(const Graph& g, const FamilyInfo& fam, Vertex u) {
  return verify_inv_formula(g, fam, u, canonical_h_ordering(g, fam, u));
}

InvReport verify_inv_formula(const Graph& g, const FamilyInfo& fam, Vertex u, const std::vector<Vertex>& ordering) {
  require_order(g, fam, "verify_inv_formula");
  require_lambda_at_most_n(fam, "verify_inv_formula");
  require_vertex(g, u);
  const std::size_t k = g.degree(u);
  const auto size = static_cast<std::size_t>(fam.lambda + 1);
  if (k % size != 0) throw PreconditionError("verify_inv_formula: deg(u) is not a multiple of lambda+1");
  {
    std::vector<Vertex> expected = g.neighbors(u).to_vector();
    expected.push_back(u);
    std::vector<Vertex> given = ordering;
    std::sort(expected.begin(), expected.end());
    std::sort(given.begin(), given.end());
    if (expected != given) throw PreconditionError("verify_inv_formula: ordering is not a permutation of N[u]");
  }

  const std::size_t dim = k + 1;
  RationalMatrix shifted(dim, dim);  // nI - A_H
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) shifted(i, j) = fam.n;
      else if (g.adjacent(ordering[i], ordering[j])) shifted(i, j) = -1;
    }
  }
  const RationalMatrix closed = scaled_h_inverse(fam, k / size);
  const Rational scale = Rational(fam.n) * (fam.n + 1) * (fam.n + 1) * (fam.n - fam.lambda);

  InvReport out;
  out.ordering = ordering;
  const RationalMatrix product = shifted * closed;
  for (std::size_t i = 0; i < dim && out.holds; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const Rational want = i == j ? scale : Rational(0);
      if (product(i, j) != want) {
        out.holds = false;
        out.discrepancy = MatrixDiscrepancy{i, j, exact::to_string(want), exact::to_string(product(i, j))};
        break;
      }
    }
  }
  const auto inv = exact::inverse(shifted);
  if (scale == 0) {
    // lambda = n: the closed form only annihilates nI - A_H; elimination must agree that it is singular.
    out.degenerate = true;
    out.matches_elimination = !inv;
    return out;
  }
  if (!inv) throw PreconditionError("verify_inv_formula: nI - A_H is singular");
  for (std::size_t i = 0; i < dim && out.matches_elimination; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((*inv)(i, j) * scale != closed(i, j)) {
        out.matches_elimination = false;
        if (!out.discrepancy) {
          out.discrepancy = MatrixDiscrepancy{i, j, exact::to_string(closed(i, j)),
                                              exact::to_string((*inv)(i, j) * scale)};
        }
        break;
      }
    }
  }
  return out;
}

StarReport verify_star(const Graph& g, const FamilyInfo& fam, Vertex u) {
  require_order(g, fam, "verify_star");
  if (fam.n <= 0) throw PreconditionError("verify_star: needs n > 0 (g = k)");
  require_lambda_at_most_n(fam, "verify_star");
  const auto ordering = canonical_h_ordering(g, fam, u);
  const std::size_t dim = ordering.size();
  const auto size = static_cast<std::size_t>(fam.lambda + 1);
  const RationalMatrix closed = scaled_h_inverse(fam, (dim - 1) / size);

  // The closed form is integral; work in int64 with the common denominator
  // D cleared. Guard the worst-case accumulated magnitude.
  std::vector<std::int64_t> b(dim * dim);
  std::int64_t max_entry = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      b[i * dim + j] = static_cast<std::int64_t>(numerator(closed(i, j)));
      max_entry = std::max(max_entry, std::abs(b[i * dim + j]));
    }
  }
  const std::int64_t scale = fam.n * (fam.n + 1) * (fam.n + 1) * (fam.n - fam.lambda);
  if (static_cast<long double>(max_entry) * dim * dim > 4.0e18L || scale > (std::int64_t{1} << 40)) {
    throw PreconditionError("verify_star: parameters too large for exact 64-bit accumulation");
  }

  const auto nbar = non_neighbors(g, u);
  std::vector<std::vector<std::size_t>> y_support(nbar.size());
  for (std::size_t r = 0; r < nbar.size(); ++r) {
    for (std::size_t pos = 0; pos < dim; ++pos) {
      if (g.adjacent(nbar[r], ordering[pos])) y_support[r].push_back(pos);
    }
  }
  StarReport out;
  out.degenerate = scale == 0;
  std::vector<std::int64_t> yb(dim);
  for (std::size_t r = 0; r < nbar.size(); ++r) {
    std::fill(yb.begin(), yb.end(), 0);
    for (std::size_t pos : y_support[r]) {
      for (std::size_t j = 0; j < dim; ++j) yb[j] += b[pos * dim + j];
    }
    for (std::size_t c = 0; c < nbar.size(); ++c) {
      std::int64_t actual = 0;
      for (std::size_t pos : y_support[c]) actual += yb[pos];
      const std::int64_t expected = scale * ((r == c ? fam.n : 0) - (g.adjacent(nbar[r], nbar[c]) ? 1 : 0));
      ++out.entries_checked;
      if (actual != expected && out.holds) {
        out.holds = false;
        if (scale == 0) {
          out.discrepancy = StarDiscrepancy{nbar[r], nbar[c], "D*: " + std::to_string(expected),
                                            "D*: " + std::to_string(actual)};
        } else {
          out.discrepancy = StarDiscrepancy{nbar[r], nbar[c], exact::to_string(Rational(expected, scale)),
                                            exact::to_string(Rational(actual, scale))};
        }
      }
    }
  }
  return out;
}

}  // namespace dfsrg
