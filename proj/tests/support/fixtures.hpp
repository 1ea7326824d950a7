#pragma once

// Independent oracles for the tests. Nothing here calls the library's
// algorithms; graphs are rebuilt from their definitions and properties are
// checked by brute force.

#include "dfsrg/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace fixtures {

using dfsrg::Graph;
using dfsrg::Vertex;

inline std::vector<std::vector<int>> adjacency(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) a[i][j] = g.adjacent(i, j) ? 1 : 0;
  }
  return a;
}

/// A^2 + (mu - lambda) A + (mu - k) I == mu J, with A regular of degree k.
inline bool matrix_identity_holds(const Graph& g, long k, long lambda, long mu) {
  const auto a = adjacency(g);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    long deg = 0;
    for (std::size_t j = 0; j < n; ++j) deg += a[i][j];
    if (deg != k || a[i][i] != 0) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      long sq = 0;
      for (std::size_t l = 0; l < n; ++l) sq += a[i][l] * a[l][j];
      const long lhs = sq + (mu - lambda) * a[i][j] + (i == j ? mu - k : 0);
      if (lhs != mu) return false;
    }
  }
  return true;
}

/// Scan of all 4-subsets for an induced K4 minus an edge.
inline bool has_induced_diamond(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const int e = g.adjacent(a, b) + g.adjacent(a, c) + g.adjacent(a, d) + g.adjacent(b, c) +
                        g.adjacent(b, d) + g.adjacent(c, d);
          if (e == 5) return true;
        }
  return false;
}

/// m_i(u, v) by direct enumeration: for x outside N[u] and N[v], count the
/// common neighbors of u, v, x.
inline std::vector<std::size_t> brute_m_spectrum(const Graph& g, Vertex u, Vertex v, std::size_t width) {
  std::vector<std::size_t> m(width, 0);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == u || x == v || g.adjacent(x, u) || g.adjacent(x, v)) continue;
    std::size_t p = 0;
    for (Vertex y = 0; y < g.order(); ++y) p += g.adjacent(y, u) && g.adjacent(y, v) && g.adjacent(y, x);
    if (p >= width) m.resize(p + 1, 0);
    ++m[p];
  }
  return m;
}

// --- GF(4) arithmetic from scratch: elements 0,1,w,w^2 as 0..3 --------------

inline int f4_mul(int a, int b) {
  if (a == 0 || b == 0) return 0;
  // log table: 1 -> 0, w -> 1, w^2 -> 2
  const int lg[4] = {-1, 0, 1, 2};
  const int ex[3] = {1, 2, 3};
  return ex[(lg[a] + lg[b]) % 3];
}

/// Component-wise scalar multiple of a packed GF(4)^d vector (2 bits each).
inline Vertex f4_scale(int c, Vertex x, int dim) {
  Vertex out = 0;
  for (int i = 0; i < dim; ++i) out |= static_cast<Vertex>(f4_mul(c, (x >> (2 * i)) & 3)) << (2 * i);
  return out;
}

/// The Cayley-model automorphism x -> c (x - u) + u of GF(4)^d.
inline std::vector<Vertex> affine_scaling(Vertex u, int c, int dim) {
  std::vector<Vertex> img(Vertex{1} << (2 * dim));
  for (Vertex x = 0; x < img.size(); ++x) img[x] = f4_scale(c, x ^ u, dim) ^ u;
  return img;
}

/// GQ(3,5) collinearity graph rebuilt from the hyperoval
/// {(1,c,c^2)} + {(0,1,0),(0,0,1)}, packed x0 + 4 x1 + 16 x2.
inline Graph oracle_gq35() {
  std::vector<Vertex> dirs;
  for (int c = 0; c < 4; ++c) dirs.push_back(1u | static_cast<Vertex>(c) << 2 | static_cast<Vertex>(f4_mul(c, c)) << 4);
  dirs.push_back(1u << 2);
  dirs.push_back(1u << 4);
  std::vector<bool> conn(64, false);
  for (Vertex d : dirs)
    for (int c = 1; c < 4; ++c) conn[f4_scale(c, d, 3)] = true;
  std::vector<dfsrg::Edge> edges;
  for (Vertex x = 0; x < 64; ++x)
    for (Vertex y = x + 1; y < 64; ++y)
      if (conn[x ^ y]) edges.emplace_back(x, y);
  return Graph::from_edges(64, edges);
}

/// Affine polar graph on GF(4)^4 for the elliptic form
/// Q = x0 x1 + x2^2 + x2 x3 + w x3^2: x ~ y iff x != y and Q(x - y) = 0.
/// Its connection set is the 51 nonzero vectors over the 17-point ovoid,
/// giving SRG(256,51,2,12) (family n = 3, lambda = 2).
inline Graph ovoid_graph() {
  auto q = [](Vertex x) {
    const int x0 = x & 3, x1 = (x >> 2) & 3, x2 = (x >> 4) & 3, x3 = (x >> 6) & 3;
    return f4_mul(x0, x1) ^ f4_mul(x2, x2) ^ f4_mul(x2, x3) ^ f4_mul(2, f4_mul(x3, x3));
  };
  std::vector<dfsrg::Edge> edges;
  for (Vertex x = 0; x < 256; ++x)
    for (Vertex y = x + 1; y < 256; ++y)
      if (q(x ^ y) == 0) edges.emplace_back(x, y);
  return Graph::from_edges(256, edges);
}

/// Folded 5-cube: GF(2)^4 with x ~ y iff x ^ y has weight 1 or 4.
inline Graph clebsch_graph() {
  std::vector<dfsrg::Edge> edges;
  for (Vertex x = 0; x < 16; ++x)
    for (Vertex y = x + 1; y < 16; ++y) {
      const int w = __builtin_popcount(x ^ y);
      if (w == 1 || w == 4) edges.emplace_back(x, y);
    }
  return Graph::from_edges(16, edges);
}

inline Graph petersen_graph() {
  std::vector<dfsrg::Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

/// First edge and first non-edge, for mutation tests.
inline std::array<Vertex, 2> first_edge(const Graph& g) {
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) return {i, j};
  return {0, 0};
}

inline std::array<Vertex, 2> first_non_edge(const Graph& g) {
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) return {i, j};
  return {0, 0};
}

}  // namespace fixtures
