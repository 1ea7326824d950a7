#include "dfsrg/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dfsrg {

IncidenceStructure::IncidenceStructure(std::size_t num_points, std::vector<std::vector<std::size_t>> lines)
    : num_points_(num_points), lines_(std::move(lines)) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    auto& line = lines_[l];
    std::sort(line.begin(), line.end());
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] >= num_points_) {
        throw PreconditionError("line " + std::to_string(l) + " has point " + std::to_string(line[i]) +
                                " >= " + std::to_string(num_points_));
      }
      if (i && line[i] == line[i - 1]) {
        throw PreconditionError("line " + std::to_string(l) + " repeats point " + std::to_string(line[i]));
      }
    }
    if (!seen.insert(line).second) throw PreconditionError("line " + std::to_string(l) + " is a duplicate");
  }
}

PqAxiomReport verify_pq_axioms(const IncidenceStructure& inc) {
  PqAxiomReport out;
  const auto& lines = inc.lines();
  const std::size_t np = inc.num_points();
  auto fail = [&](int axiom, std::string detail, std::vector<std::size_t> pts, std::vector<std::size_t> ls) {
    out.violated_axiom = axiom;
    out.detail = std::move(detail);
    out.witness_points = std::move(pts);
    out.witness_lines = std::move(ls);
    return out;
  };
  if (lines.empty() || np == 0) return fail(1, "structure has no lines or no points", {}, {});

  // (i) constant line size s+1 and constant point degree t+1.
  const std::size_t line_size = lines[0].size();
  for (std::size_t l = 1; l < lines.size(); ++l) {
    if (lines[l].size() != line_size) {
      return fail(1, "lines 0 and " + std::to_string(l) + " have different sizes", {}, {0, l});
    }
  }
  std::vector<std::vector<std::size_t>> lines_through(np);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    for (auto p : lines[l]) lines_through[p].push_back(l);
  }
  const std::size_t point_degree = lines_through[0].size();
  for (std::size_t p = 1; p < np; ++p) {
    if (lines_through[p].size() != point_degree) {
      return fail(1, "points 0 and " + std::to_string(p) + " lie on different numbers of lines", {0, p}, {});
    }
  }
  if (line_size < 2 || point_degree < 2) {
    return fail(1, "need s >= 1 and t >= 1 (line size " + std::to_string(line_size) + ", point degree " +
                       std::to_string(point_degree) + ")",
                {}, {});
  }

  // (ii) two points share at most one line; build the line-of-pair table.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> joining(np * np, kNone);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto& line = lines[l];
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        auto& slot = joining[line[i] * np + line[j]];
        if (slot != kNone) {
          return fail(2, "points " + std::to_string(line[i]) + " and " + std::to_string(line[j]) +
                             " lie on two lines",
                      {line[i], line[j]}, {slot, l});
        }
        slot = l;
        joining[line[j] * np + line[i]] = l;
      }
    }
  }

  // (iii) a point off a line is collinear with at most one point of it.
  for (std::size_t l = 0; l < lines.size(); ++l) {
    std::vector<bool> on_line(np, false);
    for (auto p : lines[l]) on_line[p] = true;
    for (std::size_t p = 0; p < np; ++p) {
      if (on_line[p]) continue;
      std::vector<std::size_t> hits;
      for (auto q : lines[l]) {
        if (joining[p * np + q] != kNone) hits.push_back(q);
      }
      if (hits.size() > 1) {
        hits.insert(hits.begin(), p);
        return fail(3, "point " + std::to_string(p) + " is collinear with several points of line " +
                           std::to_string(l),
                    hits, {l});
      }
    }
  }

  // (iv) non-collinear pairs have exactly mu common collinear points.
  const Graph g = collinearity_graph(inc);
  std::optional<std::size_t> mu;
  std::array<std::size_t, 2> first{};
  for (Vertex p = 0; p < np; ++p) {
    for (Vertex q = p + 1; q < np; ++q) {
      if (g.adjacent(p, q)) continue;
      const std::size_t c = g.common_neighbor_count(p, q);
      if (!mu) {
        mu = c;
        first = {p, q};
      } else if (*mu != c) {
        return fail(4, "non-collinear pairs {" + std::to_string(first[0]) + "," + std::to_string(first[1]) +
                           "} and {" + std::to_string(p) + "," + std::to_string(q) + "} have " +
                           std::to_string(*mu) + " and " + std::to_string(c) + " common collinear points",
                    {first[0], first[1], p, q}, {});
      }
    }
  }
  if (!mu) return fail(4, "every two points are collinear; mu is undefined", {}, {});
  const auto s = static_cast<std::int64_t>(line_size) - 1;
  const auto t = static_cast<std::int64_t>(point_degree) - 1;
  const auto m = static_cast<std::int64_t>(*mu);
  if (m < 1 || m > t + 1) {
    return fail(4, "mu = " + std::to_string(m) + " outside [1, t+1]", {first[0], first[1]}, {});
  }
  out.params = PqParams(s, t, m);
  out.generalized_quadrangle = out.params->is_generalized_quadrangle();
  return out;
}

Graph collinearity_graph(const IncidenceStructure& inc) {
  std::vector<Edge> edges;
  for (const auto& line : inc.lines()) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        edges.emplace_back(static_cast<Vertex>(line[i]), static_cast<Vertex>(line[j]));
      }
    }
  }
  return Graph::from_edges(inc.num_points(), edges);
}

IncidenceStructure graph_to_pq(const Graph& g) {
  const SrgCheck srg = check_srg(g);
  if (!srg.params) throw PreconditionError("graph_to_pq: not a strongly regular graph (" + srg.reason + ")");
  const DiamondCheck df = is_diamond_free(g);
  if (!df.diamond_free) throw PreconditionError("graph_to_pq: graph contains an induced diamond");
  std::vector<std::vector<std::size_t>> lines;
  for (const auto& clique : maximal_cliques_via_edges(g)) lines.emplace_back(clique.begin(), clique.end());
  return IncidenceStructure(g.order(), std::move(lines));
}

Vertex gf4_vector_id(const GF4Vector3& x) {
  return static_cast<Vertex>(x[0].value() | (x[1].value() << 2) | (x[2].value() << 4));
}

GF4Vector3 gf4_vector_from_id(Vertex id) {
  return {GF4(static_cast<std::uint8_t>(id & 3u)), GF4(static_cast<std::uint8_t>((id >> 2) & 3u)),
          GF4(static_cast<std::uint8_t>((id >> 4) & 3u))};
}

std::vector<GF4Vector3> gq35_hyperoval() {
  std::vector<GF4Vector3> oval;
  for (std::uint8_t c = 0; c < 4; ++c) {
    const GF4 x(c);
    oval.push_back({GF4::one(), x, x * x});
  }
  oval.push_back({GF4::zero(), GF4::one(), GF4::zero()});
  oval.push_back({GF4::zero(), GF4::zero(), GF4::one()});
  return oval;
}

namespace {

GF4 det3(const GF4Vector3& a, const GF4Vector3& b, const GF4Vector3& c) {
  // Characteristic 2: every sign is +.
  return a[0] * (b[1] * c[2] + b[2] * c[1]) + a[1] * (b[0] * c[2] + b[2] * c[0]) +
         a[2] * (b[0] * c[1] + b[1] * c[0]);
}

}  // namespace

std::vector<Vertex> gq35_connection_set() {
  const auto oval = gq35_hyperoval();
  for (std::size_t i = 0; i < oval.size(); ++i) {
    for (std::size_t j = i + 1; j < oval.size(); ++j) {
      for (std::size_t l = j + 1; l < oval.size(); ++l) {
        if (det3(oval[i], oval[j], oval[l]) == GF4::zero()) {
          throw std::logic_error("hyperoval self-check failed: three collinear points");
        }
      }
    }
  }
  std::vector<Vertex> conn;
  for (const auto& d : oval) {
    for (std::uint8_t c = 1; c < 4; ++c) {
      const GF4 a(c);
      conn.push_back(gf4_vector_id({a * d[0], a * d[1], a * d[2]}));
    }
  }
  std::sort(conn.begin(), conn.end());
  if (std::adjacent_find(conn.begin(), conn.end()) != conn.end() || conn.front() == 0) {
    throw std::logic_error("hyperoval self-check failed: connection set is not 18 distinct nonzero vectors");
  }
  return conn;
}

Graph build_rook4() {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 16; ++a) {
    for (Vertex b = a + 1; b < 16; ++b) {
      if (a / 4 == b / 4 || a % 4 == b % 4) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(16, edges);
}

Graph build_shrikhande() {
  const int shifts[6][2] = {{1, 0}, {3, 0}, {0, 1}, {0, 3}, {1, 1}, {3, 3}};
  std::vector<Edge> edges;
  for (Vertex a = 0; a < 16; ++a) {
    const Vertex i = a / 4, j = a % 4;
    for (const auto& d : shifts) {
      const Vertex b = ((i + d[0]) % 4) * 4 + (j + d[1]) % 4;
      if (a < b) edges.emplace_back(a, b);
    }
  }
  return Graph::from_edges(16, edges);
}

Graph build_gq35() {
  const auto conn = gq35_connection_set();
  std::vector<Edge> edges;
  for (Vertex x = 0; x < 64; ++x) {
    for (Vertex d : conn) {
      const Vertex y = x ^ d;
      if (x < y) edges.emplace_back(x, y);
    }
  }
  return Graph::from_edges(64, edges);
}

}  // namespace dfsrg
