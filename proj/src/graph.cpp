#include "dfsrg/graph.hpp"

#include <algorithm>
#include <set>

namespace dfsrg {

namespace {

std::string list_vertices(std::span<const Vertex> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(vs[i]);
  }
  return s + "}";
}

bool is_clique(const Graph& g, std::span<const Vertex> vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

}  // namespace

Graph::Graph(std::vector<Bitset> rows) : rows_(std::move(rows)) {
  std::size_t degree_sum = 0;
  for (const auto& r : rows_) degree_sum += r.count();
  edges_ = degree_sum / 2;
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  std::vector<Bitset> rows(order, Bitset(order));
  for (const auto& [u, v] : edges) {
    if (u >= order || v >= order) {
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for " +
                              std::to_string(order) + " vertices");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    rows[u].set(v);
    rows[v].set(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_adjacency(const std::vector<std::vector<bool>>& matrix) {
  const std::size_t n = matrix.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw PreconditionError("adjacency matrix is not square");
    if (matrix[i][i]) throw PreconditionError("self-loop at vertex " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) throw PreconditionError("adjacency matrix is not symmetric");
      if (matrix[i][j]) rows[i].set(j);
    }
  }
  return Graph(std::move(rows));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u) {
    rows_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(u, static_cast<Vertex>(v));
    });
  }
  return out;
}

Graph Graph::with_edge_toggled(Vertex u, Vertex v) const {
  if (u >= order() || v >= order() || u == v) throw PreconditionError("cannot toggle pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
  auto rows = rows_;
  rows[u].flip(v);
  rows[v].flip(u);
  return Graph(std::move(rows));
}

Graph Graph::without_vertex(Vertex v) const {
  if (v >= order()) throw PreconditionError("vertex out of range");
  std::vector<Edge> kept;
  for (auto [a, b] : edges()) {
    if (a == v || b == v) continue;
    kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return from_edges(order() - 1, kept);
}

std::vector<Vertex> common_neighbors(const Graph& g, std::span<const Vertex> vs) {
  if (vs.empty()) throw PreconditionError("common_neighbors: empty vertex list");
  for (Vertex v : vs) {
    if (v >= g.order()) throw PreconditionError("common_neighbors: vertex " + std::to_string(v) + " out of range");
  }
  Bitset acc = g.neighbors(vs[0]);
  for (std::size_t i = 1; i < vs.size(); ++i) acc &= g.neighbors(vs[i]);
  return acc.to_vector();
}

SrgCheck check_srg(const Graph& g) {
  SrgCheck out;
  const std::size_t n = g.order();
  if (n < 4) {
    out.reason = "fewer than 4 vertices";
    return out;
  }
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) != k) {
      out.reason = "not regular: deg(0)=" + std::to_string(k) + ", deg(" + std::to_string(v) + ")=" +
                   std::to_string(g.degree(v));
      out.witness = {0, v};
      return out;
    }
  }
  std::optional<std::size_t> lambda, mu;
  std::array<Vertex, 2> lambda_pair{}, mu_pair{};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = g.common_neighbor_count(u, v);
      const bool adj = g.adjacent(u, v);
      auto& slot = adj ? lambda : mu;
      auto& first = adj ? lambda_pair : mu_pair;
      if (!slot) {
        slot = c;
        first = {u, v};
      } else if (*slot != c) {
        out.reason = std::string(adj ? "adjacent" : "non-adjacent") + " pairs {" + std::to_string(first[0]) + "," +
                     std::to_string(first[1]) + "} and {" + std::to_string(u) + "," + std::to_string(v) +
                     "} have " + std::to_string(*slot) + " and " + std::to_string(c) + " common neighbors";
        out.witness = {first[0], first[1], u, v};
        return out;
      }
    }
  }
  if (!lambda) {
    out.reason = "edgeless graph";
    return out;
  }
  if (!mu) {
    out.reason = "complete graph";
    return out;
  }
  const auto nu = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);
  const auto ll = static_cast<std::int64_t>(*lambda);
  const auto mm = static_cast<std::int64_t>(*mu);
  if (!(0 < mm && mm < kk && kk < nu - 1)) {
    out.reason = "trivial strongly regular graph (disconnected or co-disconnected)";
    return out;
  }
  out.params = SrgParams(nu, kk, ll, mm);
  return out;
}

std::optional<SrgParams> is_srg(const Graph& g) { return check_srg(g).params; }

DiamondCheck is_diamond_free(const Graph& g) {
  DiamondCheck out;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Bitset& nv = g.neighbors(v);
    bool found = false;
    nv.for_each([&](std::size_t xi) {
      if (found) return;
      const auto x = static_cast<Vertex>(xi);
      Bitset block = nv & g.neighbors(x);  // clique block of x inside N(v), minus x
      block.set(x);
      (nv & g.neighbors(x)).for_each([&](std::size_t yi) {
        if (found || yi < xi) return;
        const auto y = static_cast<Vertex>(yi);
        Bitset other = nv & g.neighbors(y);
        other.set(y);
        if (other == block) return;
        // Some z in N(v) sees exactly one of x, y.
        Bitset diff = block;
        diff.subtract(other);
        Bitset diff2 = other;
        diff2.subtract(block);
        diff |= diff2;
        const auto z = static_cast<Vertex>(diff.to_vector().front());
        std::array<Vertex, 4> w{v, x, y, z};
        std::sort(w.begin(), w.end());
        out.diamond_free = false;
        out.witness = w;
        found = true;
      });
    });
    if (found) return out;
  }
  return out;
}

std::vector<std::vector<Vertex>> neighborhood_cliques(const Graph& g, Vertex u) {
  if (u >= g.order()) throw PreconditionError("vertex " + std::to_string(u) + " out of range");
  const Bitset& nu = g.neighbors(u);
  Bitset seen(g.order());
  std::vector<std::vector<Vertex>> cells;
  nu.for_each([&](std::size_t start) {
    if (seen.test(start)) return;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{static_cast<Vertex>(start)};
    seen.set(start);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      (nu & g.neighbors(x)).for_each([&](std::size_t y) {
        if (!seen.test(y)) {
          seen.set(y);
          stack.push_back(static_cast<Vertex>(y));
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    if (!is_clique(g, comp)) {
      throw StructureError("component " + list_vertices(comp) + " of N(" + std::to_string(u) + ") is not a clique",
                           comp);
    }
    cells.push_back(std::move(comp));
  });
  std::sort(cells.begin(), cells.end());
  return cells;
}

TriplePartition phi_partition(const Graph& g, Vertex u) {
  TriplePartition out{u, PartitionKind::phi, {}};
  for (auto& cell : neighborhood_cliques(g, u)) {
    if (cell.size() != 3) {
      throw StructureError("component " + list_vertices(cell) + " of N(" + std::to_string(u) +
                               ") is a clique of size " + std::to_string(cell.size()) + ", not a triangle",
                           cell);
    }
    out.cells.push_back({cell[0], cell[1], cell[2]});
  }
  return out;
}

std::vector<std::vector<Vertex>> maximal_cliques_via_edges(const Graph& g) {
  std::set<std::vector<Vertex>> found;
  for (auto [u, v] : g.edges()) {
    std::vector<Vertex> closure = (g.neighbors(u) & g.neighbors(v)).to_vector();
    closure.push_back(u);
    closure.push_back(v);
    std::sort(closure.begin(), closure.end());
    if (!is_clique(g, closure)) {
      throw StructureError("closure of edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} is not a clique; the graph is not diamond-free",
                           closure);
    }
    found.insert(std::move(closure));
  }
  return {found.begin(), found.end()};
}

}  // namespace dfsrg
