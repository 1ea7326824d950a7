#include "dfsrg/automorphism.hpp"

#include "dfsrg/localstats.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace dfsrg {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Vertex x : images_) {
    if (x >= images_.size() || hit[x]) throw PreconditionError("images do not form a permutation");
    hit[x] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> images(n);
  std::iota(images.begin(), images.end(), Vertex{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(images_.size());
  for (Vertex x = 0; x < images_.size(); ++x) inv[images_[x]] = x;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (Vertex x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::size_t result = 1;
  for (Vertex x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (Vertex y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::fixed_points() const noexcept {
  std::size_t c = 0;
  for (Vertex x = 0; x < images_.size(); ++x) c += images_[x] == x;
  return c;
}

namespace {

std::optional<std::array<Vertex, 2>> first_broken_pair(const Permutation& p, const Graph& g) {
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      if (g.adjacent(x, y) != g.adjacent(p(x), p(y))) return std::array<Vertex, 2>{x, y};
    }
  }
  return std::nullopt;
}

}  // namespace

bool Permutation::is_automorphism_of(const Graph& g) const {
  return size() == g.order() && !first_broken_pair(*this, g);
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw PreconditionError("composing permutations of different degree");
  std::vector<Vertex> images(a.size());
  for (Vertex x = 0; x < a.size(); ++x) images[x] = a.images_[b.images_[x]];
  Permutation out;
  out.images_ = std::move(images);
  return out;
}

const char* to_string(SigmaFailureKind k) {
  switch (k) {
    case SigmaFailureKind::precondition: return "precondition";
    case SigmaFailureKind::conflict: return "conflict";
    case SigmaFailureKind::unreachable: return "unreachable";
    case SigmaFailureKind::not_automorphism: return "not-automorphism";
  }
  return "?";
}

SigmaResult build_sigma(const Graph& g, const FamilyInfo& fam, Vertex u, std::size_t seed_cell,
                        Orientation orientation) {
  if (u >= g.order()) throw PreconditionError("build_sigma: vertex out of range");
  auto fail = [](SigmaFailureKind kind, std::string detail, std::vector<Vertex> witness) {
    return SigmaResult{std::nullopt, SigmaFailure{kind, std::move(detail), std::move(witness)}};
  };

  TriplePartition phi, psi;
  try {
    phi = phi_partition(g, u);
  } catch (const StructureError& e) {
    return fail(SigmaFailureKind::precondition, std::string("Phi(u): ") + e.what(), e.witness());
  }
  if (seed_cell >= phi.cells.size()) throw PreconditionError("build_sigma: seed cell index out of range");
  try {
    psi = psi_partition(g, fam, u);
  } catch (const StructureError& e) {
    return fail(SigmaFailureKind::precondition, std::string("Psi(u): ") + e.what(), e.witness());
  }
  const MatchingTable table = matched_pairs(g, u, phi, psi);
  const std::size_t s = phi.cells.size(), l = psi.cells.size();
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      if (table.at(i, j).kind == MatchKind::other) {
        std::vector<Vertex> w(phi.cells[i].begin(), phi.cells[i].end());
        w.insert(w.end(), psi.cells[j].begin(), psi.cells[j].end());
        return fail(SigmaFailureKind::precondition, "a phi/psi cell pair is neither edgeless nor 1-regular", w);
      }
    }
  }

  // Cells 0..s-1 are Phi(u), s..s+l-1 are Psi(u). images[c][p] = position of
  // sigma(cell[p]) inside the same cell.
  using Shift = std::array<std::uint8_t, 3>;
  std::vector<std::optional<Shift>> shift(s + l);
  std::vector<std::size_t> defined_by(s + l, s + l);
  auto cell = [&](std::size_t c) -> const std::array<Vertex, 3>& { return c < s ? phi.cells[c] : psi.cells[c - s]; };
  auto cell_witness = [&](std::initializer_list<std::size_t> cs) {
    std::vector<Vertex> w;
    for (auto c : cs) w.insert(w.end(), cell(c).begin(), cell(c).end());
    return w;
  };

  shift[seed_cell] = orientation == Orientation::forward ? Shift{1, 2, 0} : Shift{2, 0, 1};
  defined_by[seed_cell] = seed_cell;
  std::deque<std::size_t> work{seed_cell};
  while (!work.empty()) {
    const std::size_t c = work.front();
    work.pop_front();
    const Shift src = *shift[c];
    const bool from_phi = c < s;
    const std::size_t count = from_phi ? l : s;
    for (std::size_t other = 0; other < count; ++other) {
      const CellMatch& m = from_phi ? table.at(c, other) : table.at(other, c - s);
      if (m.kind != MatchKind::one_regular) continue;
      const std::size_t target = from_phi ? s + other : other;
      Shift induced{};
      if (from_phi) {
        for (std::uint8_t p = 0; p < 3; ++p) induced[m.bijection[p]] = m.bijection[src[p]];
      } else {
        Shift back{};
        for (std::uint8_t p = 0; p < 3; ++p) back[m.bijection[p]] = p;
        for (std::uint8_t p = 0; p < 3; ++p) induced[p] = back[src[m.bijection[p]]];
      }
      if (!shift[target]) {
        shift[target] = induced;
        defined_by[target] = c;
        work.push_back(target);
      } else if (*shift[target] != induced) {
        return fail(SigmaFailureKind::conflict,
                    "cell " + std::to_string(target) + " defined differently via cells " +
                        std::to_string(defined_by[target]) + " and " + std::to_string(c),
                    cell_witness({target, defined_by[target], c}));
      }
    }
  }
  std::vector<Vertex> undefined;
  for (std::size_t c = 0; c < s + l; ++c) {
    if (!shift[c]) undefined.insert(undefined.end(), cell(c).begin(), cell(c).end());
  }
  if (!undefined.empty()) {
    return fail(SigmaFailureKind::unreachable,
                std::to_string(undefined.size() / 3) + " cells not reached from the seed", undefined);
  }

  std::vector<Vertex> images(g.order());
  images[u] = u;
  for (std::size_t c = 0; c < s + l; ++c) {
    for (std::uint8_t p = 0; p < 3; ++p) images[cell(c)[p]] = cell(c)[(*shift[c])[p]];
  }
  Permutation sigma(std::move(images));
  if (auto broken = first_broken_pair(sigma, g)) {
    return fail(SigmaFailureKind::not_automorphism,
                "pair {" + std::to_string((*broken)[0]) + "," + std::to_string((*broken)[1]) +
                    "} changes adjacency under sigma",
                {(*broken)[0], (*broken)[1]});
  }
  return SigmaResult{std::move(sigma), std::nullopt};
}

SigmaFamily canonical_sigma_family(const Graph& g, const FamilyInfo& fam, Vertex z) {
  auto build = [&](Vertex u, Orientation o) {
    SigmaResult r = build_sigma(g, fam, u, 0, o);
    if (!r.ok()) {
      throw StructureError("sigma_" + std::to_string(u) + " failed (" + to_string(r.failure->kind) +
                               "): " + r.failure->detail,
                           r.failure->witness);
    }
    return std::move(*r.sigma);
  };
  SigmaFamily out;
  out.base = z;
  out.sigma.resize(g.order());
  out.sigma[z] = build(z, Orientation::forward);
  const Permutation z_inverse = out.sigma[z].inverse();
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == z) continue;
    Permutation fwd = build(u, Orientation::forward);
    Permutation bwd = build(u, Orientation::backward);
    const Vertex target = z_inverse(u);
    const bool f = fwd(z) == target, b = bwd(z) == target;
    if (f && b) throw std::runtime_error("normalization is ambiguous at vertex " + std::to_string(u));
    if (!f && !b) throw std::runtime_error("no orientation satisfies the normalization at vertex " + std::to_string(u));
    out.sigma[u] = f ? std::move(fwd) : std::move(bwd);
  }
  return out;
}

PairViolationReport verify_inverse_relation(const SigmaFamily& family) {
  PairViolationReport out;
  std::vector<Permutation> inv;
  for (const auto& s : family.sigma) inv.push_back(s.inverse());
  const auto n = static_cast<Vertex>(family.sigma.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      ++out.pairs_checked;
      if (family.sigma[u](v) != inv[v](u)) {
        ++out.violation_count;
        if (out.holds) out.witness = std::array<Vertex, 2>{u, v};
        out.holds = false;
      }
    }
  }
  return out;
}

PairViolationReport verify_involution_property(const SigmaFamily& family) {
  PairViolationReport out;
  std::vector<Permutation> inv;
  for (const auto& s : family.sigma) inv.push_back(s.inverse());
  const auto n = static_cast<Vertex>(family.sigma.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      ++out.pairs_checked;
      const Permutation rho = family.sigma[u] * inv[v];
      if (!(rho * rho).is_identity()) {
        ++out.violation_count;
        if (out.holds) out.witness = std::array<Vertex, 2>{u, v};
        out.holds = false;
      }
    }
  }
  return out;
}

namespace {

std::vector<Vertex> related_base(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> set;
  if (g.adjacent(a, b)) {
    set = (g.neighbors(a) & g.neighbors(b)).to_vector();
  } else {
    set = m0_set(g, a, b);
  }
  set.push_back(a);
  set.push_back(b);
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

RelatedSet related_set(const Graph& g, const FamilyInfo& fam, Vertex x, Vertex y) {
  if (x == y) throw PreconditionError("related_set: x and y must differ");
  if (x >= g.order() || y >= g.order()) throw PreconditionError("related_set: vertex out of range");
  if (fam.lambda != 2) throw PreconditionError("related_set: defined for lambda = 2");
  const auto set = related_base(g, x, y);
  const bool clique = g.adjacent(x, y);
  if (set.size() != 4) {
    throw StructureError("related set through {" + std::to_string(x) + "," + std::to_string(y) + "} has " +
                             std::to_string(set.size()) + " members",
                         set);
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (g.adjacent(set[i], set[j]) != clique) {
        throw StructureError(std::string("related set is not ") + (clique ? "a clique" : "independent"), set);
      }
      if (related_base(g, set[i], set[j]) != set) {
        throw StructureError("members {" + std::to_string(set[i]) + "," + std::to_string(set[j]) +
                                 "} do not regenerate the related set",
                             set);
      }
    }
  }
  return RelatedSet{{set[0], set[1], set[2], set[3]}, clique ? RelatedKind::clique : RelatedKind::independent};
}

RelatedPartitionReport related_partition(const Graph& g, const FamilyInfo& fam) {
  RelatedPartitionReport out;
  std::set<std::array<Vertex, 4>> sets;
  for (Vertex x = 0; x < g.order(); ++x) {
    for (Vertex y = x + 1; y < g.order(); ++y) {
      try {
        const RelatedSet r = related_set(g, fam, x, y);
        if (sets.insert(r.members).second) {
          ++(r.kind == RelatedKind::clique ? out.cliques : out.independents);
        }
      } catch (const StructureError& e) {
        out.holds = false;
        out.failure = e.what();
        out.witness = e.witness();
        return out;
      }
    }
  }
  out.pairs_covered = 6 * sets.size();
  const std::size_t n = g.order();
  if (out.pairs_covered != n * (n - 1) / 2) {
    out.holds = false;
    out.failure = "related sets cover " + std::to_string(out.pairs_covered) + " pairs, expected " +
                  std::to_string(n * (n - 1) / 2);
  }
  return out;
}

namespace {

struct ImagesHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex x : v) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

GroupClosure generate_group(std::span<const Permutation> generators, std::size_t degree, std::size_t cap) {
  GroupClosure out;
  std::set<Permutation> unique(generators.begin(), generators.end());
  for (const auto& p : unique) {
    if (p.size() != degree) throw PreconditionError("generate_group: generator of wrong degree");
  }
  out.generators.assign(unique.begin(), unique.end());

  std::unordered_map<std::vector<Vertex>, std::size_t, ImagesHash> index;
  out.elements.push_back(Permutation::identity(degree));
  index.emplace(out.elements.back().images(), 0);
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    for (const auto& gen : out.generators) {
      Permutation next = gen * out.elements[head];
      if (index.contains(next.images())) continue;
      if (out.elements.size() >= cap) {
        throw std::length_error("group closure exceeded " + std::to_string(cap) + " elements");
      }
      index.emplace(next.images(), out.elements.size());
      out.elements.push_back(std::move(next));
    }
  }

  std::vector<Vertex> parent(degree);
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gen : out.generators) {
    for (Vertex x = 0; x < degree; ++x) {
      const Vertex a = find(x), b = find(gen(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<Vertex, std::vector<Vertex>> orbits;
  for (Vertex x = 0; x < degree; ++x) orbits[find(x)].push_back(x);
  for (auto& [root, members] : orbits) out.orbits.push_back(std::move(members));
  return out;
}

GammaReport generate_gamma(const SigmaFamily& family, const SrgParams& params, std::size_t cap) {
  const std::size_t n = family.sigma.size();
  std::set<Permutation> gens;
  std::vector<Permutation> inv;
  for (const auto& s : family.sigma) inv.push_back(s.inverse());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) gens.insert(family.sigma[u] * inv[v]);
    }
  }
  const std::vector<Permutation> gen_list(gens.begin(), gens.end());

  GammaReport out;
  out.group = generate_group(gen_list, n, cap);
  out.abelian = true;
  for (std::size_t i = 0; i < gen_list.size() && out.abelian; ++i) {
    for (std::size_t j = i + 1; j < gen_list.size(); ++j) {
      if (gen_list[i] * gen_list[j] != gen_list[j] * gen_list[i]) {
        out.abelian = false;
        break;
      }
    }
  }
  out.transitive = out.group.orbits.size() == 1;
  out.order_is_power_of_two = std::has_single_bit(out.group.elements.size());
  try {
    out.fixed_point_bound = fixed_point_bound(params).bound;
  } catch (const PreconditionError&) {
    out.fixed_point_bound.reset();
  }
  for (const auto& e : out.group.elements) {
    ++out.element_orders[e.order()];
    if (e.is_identity()) continue;
    const std::size_t fixed = e.fixed_points();
    ++out.fixed_points[fixed];
    if (out.fixed_point_bound && exact::Rational(fixed) > *out.fixed_point_bound) out.within_fixed_point_bound = false;
  }
  return out;
}

}  // namespace dfsrg
