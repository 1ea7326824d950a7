#include "dfsrg/cli/run.hpp"

#include "dfsrg/automorphism.hpp"
#include "dfsrg/certificates.hpp"
#include "dfsrg/cli/graph6.hpp"
#include "dfsrg/cli/incidence_io.hpp"
#include "dfsrg/geometry.hpp"
#include "dfsrg/localstats.hpp"
#include "dfsrg/params.hpp"
#include "dfsrg/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iterator>
#include <sstream>

namespace dfsrg::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::optional<std::int64_t> n, lambda;
  bool timing = false;
  std::vector<std::int64_t> numbers;
  std::string target;
  std::optional<Vertex> vertex;
  std::vector<Vertex> pair;
  std::string incidence_out;
  std::int64_t max = kDiophantineDefaultMax;
};

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json to_json(const exact::Rational& r) {
  if (exact::is_integer(r)) {
    const exact::Integer i = boost::multiprecision::numerator(r);
    if (i >= std::numeric_limits<std::int64_t>::min() && i <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(i);
    }
  }
  return exact::to_string(r);
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? to_json(*v) : json(nullptr);
}

json to_json(const SrgParams& p) {
  return {{"nu", p.nu()}, {"k", p.k()}, {"lambda", p.lambda()}, {"mu", p.mu()}};
}

json to_json(const PqParams& p) {
  return {{"s", p.s()}, {"t", p.t()}, {"mu", p.mu()}, {"generalized_quadrangle", p.is_generalized_quadrangle()}};
}

json to_json(const FamilyInfo& f) {
  return {{"n", f.n}, {"lambda", f.lambda}, {"kind", to_string(f.kind)}};
}

json to_json(const SpectrumReport& s) {
  return {{"r", opt_json(s.r)},
          {"s", opt_json(s.s_eig)},
          {"f", opt_json(s.f)},
          {"g", opt_json(s.g)},
          {"delta_squared", exact::to_string(s.delta_squared)},
          {"conference", s.is_conference},
          {"integral", s.integral}};
}

class Report {
 public:
  Report(std::string command, const std::vector<std::string>& args) {
    doc_["command"] = std::move(command);
    doc_["arguments"] = args;
  }

  void set_input(json input) { doc_["input"] = std::move(input); }
  json& result() { return result_; }
  void reject() { rejected_ = true; }

  void add(const std::string& name, Severity severity, bool holds, json detail = json::object(),
           json witness = nullptr) {
    const Outcome o = outcome(holds, severity);
    if (o == Outcome::asserted_fail) {
      failed_ = true;
      if (witness.is_null()) witness = detail;
    }
    json c;
    c["name"] = name;
    c["severity"] = to_string(severity);
    c["holds"] = holds;
    c["outcome"] = to_string(o);
    if (!detail.empty()) c["detail"] = std::move(detail);
    if (!witness.is_null()) c["witness"] = std::move(witness);
    checks_.push_back(std::move(c));
  }

  int emit(std::ostream& out, std::optional<double> elapsed_ms) {
    doc_["checks"] = checks_.empty() ? json::array() : checks_;
    doc_["result"] = result_.is_null() ? json::object() : result_;
    doc_["status"] = rejected_ ? "precondition-rejected" : failed_ ? "fail" : "pass";
    if (elapsed_ms) doc_["timing_ms"] = *elapsed_ms;
    out << doc_.dump(2) << '\n';
    return failed_ ? 1 : 0;
  }

 private:
  json doc_;
  json checks_ = json::array();
  json result_;
  bool failed_ = false;
  bool rejected_ = false;
};

std::string read_text(const std::string& file, std::istream& in) {
  if (file.empty() || file == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(file, std::ios::binary);
  if (!f) throw UsageError("cannot open " + file);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

Graph load_graph(const Options& o, std::istream& in, Report& report) {
  const std::string text = read_text(o.file, in);
  Graph g;
  try {
    g = parse_graph6(text);
  } catch (const Graph6Error& e) {
    throw UsageError(std::string("graph6: ") + e.what());
  }
  report.set_input({{"vertices", g.order()},
                    {"edges", g.edge_count()},
                    {"graph6_fnv1a64", hex64(fnv1a64(serialize_graph6(g)))}});
  return g;
}

Vertex checked_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.order()) throw UsageError(std::string(what) + " " + std::to_string(v) + " out of range");
  return v;
}

/// Asserted check that g is the family member named by --n/--lambda, or the
/// one its parameters belong to. Returns the family when later checks can run.
std::optional<FamilyInfo> resolve_family(const Graph& g, const Options& o, Report& report) {
  if (o.n.has_value() != o.lambda.has_value()) throw UsageError("--n and --lambda must be given together");
  const SrgCheck c = check_srg(g);
  auto srg_witness = [&]() -> json {
    if (c.params) return {{"parameters", to_json(*c.params)}};
    return {{"reason", c.reason}, {"vertices", c.witness}};
  };
  if (o.n) {
    FamilyInfo fam;
    try {
      fam = family_member(*o.n, *o.lambda);
      (void)fam.params();
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
    const bool holds = c.params && *c.params == fam.params();
    report.add("family-member", Severity::asserted, holds,
               {{"family", to_json(fam)}, {"expected", to_json(fam.params())}, {"source", "override"}},
               holds ? json(nullptr) : srg_witness());
    if (static_cast<std::size_t>(fam.params().nu()) != g.order()) return std::nullopt;
    return fam;
  }
  if (!c.params) {
    report.add("family-member", Severity::asserted, false, {{"reason", c.reason}}, srg_witness());
    return std::nullopt;
  }
  const auto fam = detect_family(*c.params);
  json detail{{"parameters", to_json(*c.params)}, {"source", "detected"}};
  if (fam) detail["family"] = to_json(*fam);
  report.add("family-member", Severity::asserted, fam.has_value(), detail,
             fam ? json(nullptr) : json{{"parameters", to_json(*c.params)}});
  return fam;
}

bool require_diamond_free(const Graph& g, Report& report) {
  const DiamondCheck d = is_diamond_free(g);
  report.add("diamond-free", Severity::asserted, d.diamond_free, json::object(),
             d.witness ? json{{"diamond", *d.witness}} : json(nullptr));
  return d.diamond_free;
}

json cells_json(const TriplePartition& p) {
  json out = json::array();
  for (const auto& c : p.cells) out.push_back(c);
  return out;
}

std::string spectrum_key(const std::vector<std::size_t>& counts) {
  std::string key;
  for (std::size_t i = 0; i < counts.size(); ++i) key += (i ? "," : "") + std::to_string(counts[i]);
  return key;
}

// --- commands ---------------------------------------------------------------

void cmd_feasibility(const Options& o, std::istream&, Report& report) {
  std::optional<SrgParams> p;
  try {
    p.emplace(o.numbers.at(0), o.numbers.at(1), o.numbers.at(2), o.numbers.at(3));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const SpectrumReport sp = spectrum_of(*p);
  json& r = report.result();
  r["parameters"] = to_json(*p);
  r["spectrum"] = to_json(sp);
  const auto fam = detect_family(*p);
  r["family"] = fam ? to_json(*fam) : json(nullptr);
  const auto pq = srg_to_pq_params(*p);
  r["pq_parameters"] = pq ? to_json(*pq) : json(nullptr);
  if (sp.integral) {
    const FixedPointBound b = fixed_point_bound(*p);
    r["fixed_point_bound"] = {{"bound", to_json(b.bound)}, {"quarter", to_json(b.quarter)},
                              {"within_quarter", b.within_quarter}};
  }

  const exact::Integer lhs = exact::Integer(p->k()) * (p->k() - p->lambda() - 1);
  const exact::Integer rhs = exact::Integer(p->nu() - p->k() - 1) * p->mu();
  report.add("counting-identity", Severity::asserted, lhs == rhs,
             {{"k(k-lambda-1)", exact::to_string(lhs)}, {"(nu-k-1)mu", exact::to_string(rhs)}});
  const bool mult_ok = sp.f && sp.g && exact::is_integer(*sp.f) && exact::is_integer(*sp.g) && *sp.f >= 0 &&
                       *sp.g >= 0;
  report.add("integral-multiplicities", Severity::asserted, mult_ok,
             {{"f", opt_json(sp.f)}, {"g", opt_json(sp.g)}});
}

void cmd_pq_params(const Options& o, std::istream&, Report& report) {
  std::optional<PqParams> q;
  try {
    q.emplace(o.numbers.at(0), o.numbers.at(1), o.numbers.at(2));
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  json& r = report.result();
  r["pq_parameters"] = to_json(*q);
  try {
    const SrgParams p = pq_to_srg(*q);
    r["srg_parameters"] = to_json(p);
    const auto fam = detect_family(p);
    r["family"] = fam ? to_json(*fam) : json(nullptr);
    report.add("srg-parameters", Severity::asserted, true, {{"parameters", to_json(p)}});
  } catch (const std::domain_error& e) {
    report.add("srg-parameters", Severity::asserted, false, {{"error", e.what()}},
               {{"s^2 t (t+1)", q->s() * q->s() * q->t() * (q->t() + 1)}, {"mu", q->mu()}});
  }
}

void cmd_check_srg(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const SrgCheck c = check_srg(g);
  report.result()["parameters"] = c.params ? to_json(*c.params) : json(nullptr);
  if (c.params) {
    const auto fam = detect_family(*c.params);
    report.result()["family"] = fam ? to_json(*fam) : json(nullptr);
  }
  report.add("strongly-regular", Severity::asserted, c.params.has_value(),
             c.params ? json::object() : json{{"reason", c.reason}},
             c.params ? json(nullptr) : json{{"vertices", c.witness}});
}

void cmd_check_diamond_free(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  require_diamond_free(g, report);
}

void cmd_local_stats(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const Vertex u = checked_vertex(g, o.vertex.value_or(0), "--vertex");
  const auto fam = resolve_family(g, o, report);
  if (!fam || !require_diamond_free(g, report)) return;
  const Severity lemma = lemma_severity(*fam);
  json& r = report.result();
  r["vertex"] = u;
  r["family"] = to_json(*fam);
  r["neighborhood_cliques"] = neighborhood_cliques(g, u);

  std::map<std::string, std::size_t> distribution;
  std::optional<std::array<Vertex, 2>> moment_witness;
  const std::vector<std::size_t> expected =
      fam->lambda == 2 && fam->n >= 2 ? uniq_m_spectrum(*fam) : std::vector<std::size_t>{};
  std::optional<std::array<Vertex, 2>> uniq_witness;
  std::size_t pairs = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == u || g.adjacent(u, v)) continue;
    const MSpectrum ms = m_spectrum(g, *fam, u, v);
    ++pairs;
    ++distribution[spectrum_key(ms.counts)];
    if (!ms.identities_hold && !moment_witness) moment_witness = std::array<Vertex, 2>{u, v};
    if (!expected.empty() && ms.counts != expected && !uniq_witness) uniq_witness = std::array<Vertex, 2>{u, v};
  }
  r["m_spectrum_distribution"] = distribution;
  report.add("sys-moments", Severity::asserted, !moment_witness, {{"pairs", pairs}},
             moment_witness ? json{{"pair", *moment_witness}} : json(nullptr));
  if (!expected.empty()) {
    report.add("uniq-m-spectrum", lemma, !uniq_witness, {{"expected", spectrum_key(expected)}},
               uniq_witness ? json{{"pair", *uniq_witness}} : json(nullptr));
  }

  std::optional<TriplePartition> phi, psi;
  try {
    phi = phi_partition(g, u);
    r["phi"] = cells_json(*phi);
  } catch (const StructureError& e) {
    report.add("phi-partition", lemma, false, {{"error", e.what()}}, {{"vertices", e.witness()}});
  }
  try {
    psi = psi_partition(g, *fam, u);
    r["psi"] = cells_json(*psi);
    report.add("psi-partition", lemma, true, {{"cells", psi->cells.size()}});
  } catch (const StructureError& e) {
    report.add("psi-partition", lemma, false, {{"error", e.what()}}, {{"vertices", e.witness()}});
  }
  if (!phi || !psi) return;

  const MatchingTable table = matched_pairs(g, u, *phi, *psi);
  std::map<std::size_t, std::size_t> degree_distribution;
  for (auto d : table.psi_matched_degree) ++degree_distribution[d];
  json degrees = json::object();
  for (const auto& [d, c] : degree_distribution) degrees[std::to_string(d)] = c;
  r["psi_matched_degree_distribution"] = degrees;
  json other = nullptr;
  for (std::size_t i = 0; i < table.phi_cells && other.is_null(); ++i) {
    for (std::size_t j = 0; j < table.psi_cells; ++j) {
      if (table.at(i, j).kind == MatchKind::other) {
        other = {{"phi", phi->cells[i]}, {"psi", psi->cells[j]}};
        break;
      }
    }
  }
  report.add("phi-psi-matching", lemma, table.other_count == 0, {{"other_pairs", table.other_count}}, other);

  const PsiRegularityReport reg = verify_psi_regularity(g, *fam, u);
  json rdist = json::object();
  for (const auto& [k, c] : reg.r_distribution) rdist[std::to_string(k)] = c;
  json viol = json::array();
  for (const auto& v : reg.violations) viol.push_back({{"psi_a", v.psi_a}, {"psi_b", v.psi_b}, {"detail", v.detail}});
  report.add("psi-regularity", reg.severity, reg.holds,
             {{"pairs", reg.pairs_checked}, {"r_distribution", rdist}, {"violations", reg.violation_count}},
             reg.holds ? json(nullptr) : json{{"violations", viol}});
}

void cmd_check_con(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const auto fam = resolve_family(g, o, report);
  if (!fam || !require_diamond_free(g, report)) return;
  const ConReport c = check_condition_con(g, *fam);
  report.result() = {{"pairs", c.pairs_checked}, {"min_m0", c.min_m0}, {"max_m0", c.max_m0}};
  report.add("condition-con", Severity::asserted, c.holds, {{"pairs", c.pairs_checked}},
             c.witness ? json{{"pair", *c.witness}} : json(nullptr));
}

void cmd_check_eq_pq(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const auto fam = resolve_family(g, o, report);
  if (!fam || !require_diamond_free(g, report)) return;
  const EqPqReport e = verify_eq_pq(g, *fam);
  report.result() = {{"triples", e.triples_checked}};
  json witness = nullptr;
  if (e.counterexample) {
    const auto& c = *e.counterexample;
    witness = {{"u", c.u}, {"v", c.v}, {"w", c.w}, {"adjacent", c.adjacent},
               {"p", c.p}, {"q", c.q}, {"lhs", c.lhs}, {"expected", c.expected}};
  }
  report.add("eq-pq", Severity::asserted, e.holds, {{"triples", e.triples_checked}}, witness);
}

void cmd_check_star(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const auto fam = resolve_family(g, o, report);
  if (!fam || !require_diamond_free(g, report)) return;
  json inv_witness = nullptr, star_witness = nullptr;
  std::size_t entries = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const InvReport inv = verify_inv_formula(g, *fam, u);
    if ((!inv.holds || !inv.matches_elimination) && inv_witness.is_null()) {
      inv_witness = {{"u", u}, {"ordering", inv.ordering}};
      if (inv.discrepancy) {
        inv_witness["row"] = inv.discrepancy->row;
        inv_witness["col"] = inv.discrepancy->col;
        inv_witness["expected"] = inv.discrepancy->expected;
        inv_witness["actual"] = inv.discrepancy->actual;
      }
    }
    const StarReport star = verify_star(g, *fam, u);
    entries += star.entries_checked;
    if (!star.holds && star_witness.is_null()) {
      star_witness = {{"u", u}};
      if (star.discrepancy) {
        star_witness["v"] = star.discrepancy->v;
        star_witness["w"] = star.discrepancy->w;
        star_witness["expected"] = star.discrepancy->expected;
        star_witness["actual"] = star.discrepancy->actual;
      }
    }
  }
  // lambda = n clears to D = 0: only the annihilation identities remain
  const bool degenerate = fam->lambda == fam->n;
  report.result() = {{"base_vertices", g.order()}, {"star_entries", entries}, {"degenerate", degenerate}};
  report.add("inv-formula", Severity::asserted, inv_witness.is_null(),
             {{"base_vertices", g.order()}, {"degenerate", degenerate}}, inv_witness);
  report.add("star-identity", Severity::asserted, star_witness.is_null(),
             {{"entries", entries}, {"degenerate", degenerate}}, star_witness);
}

json sigma_failure_json(Vertex u, const SigmaFailure& f) {
  return {{"u", u}, {"kind", to_string(f.kind)}, {"detail", f.detail}, {"vertices", f.witness}};
}

/// Builds sigma_u (seed 0, forward) everywhere and records the checks; the
/// canonical family is returned when everything needed for it succeeded.
std::optional<SigmaFamily> sigma_checks(const Graph& g, const FamilyInfo& fam, Vertex base, bool seeds,
                                        Report& report) {
  const Severity lemma = lemma_severity(fam);
  std::vector<Permutation> sigma;
  json build_witness = nullptr, shape_witness = nullptr, seed_witness = nullptr;
  for (Vertex u = 0; u < g.order() && build_witness.is_null(); ++u) {
    SigmaResult r = build_sigma(g, fam, u, 0, Orientation::forward);
    if (!r.ok()) {
      build_witness = sigma_failure_json(u, *r.failure);
      break;
    }
    const Permutation& s = *r.sigma;
    if ((s.order() != 3 || s.fixed_points() != 1 || s(u) != u) && shape_witness.is_null()) {
      shape_witness = {{"u", u}, {"order", s.order()}, {"fixed_points", s.fixed_points()}};
    }
    if (seeds && seed_witness.is_null()) {
      const Permutation inv = s.inverse();
      const std::size_t cells = g.degree(u) / 3;
      for (std::size_t seed = 0; seed < cells && seed_witness.is_null(); ++seed) {
        for (Orientation o : {Orientation::forward, Orientation::backward}) {
          SigmaResult alt = build_sigma(g, fam, u, seed, o);
          if (!alt.ok() || (*alt.sigma != s && *alt.sigma != inv)) {
            seed_witness = {{"u", u}, {"seed_cell", seed}, {"orientation", o == Orientation::forward ? "forward" : "backward"}};
            break;
          }
        }
      }
    }
    sigma.push_back(std::move(*r.sigma));
  }
  report.add("sigma-construction", lemma, build_witness.is_null(), {{"vertices", g.order()}}, build_witness);
  if (!build_witness.is_null()) return std::nullopt;
  report.add("sigma-order-three-one-fixed-point", lemma, shape_witness.is_null(), json::object(), shape_witness);
  if (seeds) report.add("sigma-seed-independence", lemma, seed_witness.is_null(), json::object(), seed_witness);

  try {
    return canonical_sigma_family(g, fam, base);
  } catch (const std::runtime_error& e) {
    report.add("sigma-normalization", lemma, false, {{"error", e.what()}}, {{"base", base}, {"error", e.what()}});
    return std::nullopt;
  }
}

void cmd_sigma(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const Vertex base = checked_vertex(g, o.vertex.value_or(0), "--base");
  const auto fam = resolve_family(g, o, report);
  if (!fam || !require_diamond_free(g, report)) return;
  const auto family = sigma_checks(g, *fam, base, true, report);
  if (!family) return;
  const Severity lemma = lemma_severity(*fam);
  const PairViolationReport inv = verify_inverse_relation(*family);
  report.add("inverse-relation", lemma, inv.holds, {{"pairs", inv.pairs_checked}, {"violations", inv.violation_count}},
             inv.witness ? json{{"pair", *inv.witness}} : json(nullptr));
  const PairViolationReport inv2 = verify_involution_property(*family);
  report.add("involution-property", lemma, inv2.holds,
             {{"pairs", inv2.pairs_checked}, {"violations", inv2.violation_count}},
             inv2.witness ? json{{"pair", *inv2.witness}} : json(nullptr));
  json images = json::array();
  for (const auto& s : family->sigma) images.push_back(s.images());
  report.result() = {{"base", base}, {"sigma", images}};
}

void cmd_group(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const auto fam = resolve_family(g, o, report);
  if (!fam || !require_diamond_free(g, report)) return;
  const auto family = sigma_checks(g, *fam, 0, false, report);
  if (!family) return;
  const Severity lemma = lemma_severity(*fam);
  GammaReport gamma;
  try {
    gamma = generate_gamma(*family, fam->params());
  } catch (const std::length_error& e) {
    report.add("group-closure", Severity::diagnostic, false, {{"error", e.what()}});
    return;
  }
  json orders = json::object(), fixed = json::object(), orbit_sizes = json::array();
  for (const auto& [k, c] : gamma.element_orders) orders[std::to_string(k)] = c;
  for (const auto& [k, c] : gamma.fixed_points) fixed[std::to_string(k)] = c;
  for (const auto& orb : gamma.group.orbits) orbit_sizes.push_back(orb.size());
  const std::size_t order = gamma.group.elements.size();
  report.result() = {{"order", order},
                     {"generators", gamma.group.generators.size()},
                     {"orbit_sizes", orbit_sizes},
                     {"element_orders", orders},
                     {"fixed_points", fixed},
                     {"fixed_point_bound", opt_json(gamma.fixed_point_bound)}};

  report.add("abelian", lemma, gamma.abelian);
  report.add("transitive", lemma, gamma.transitive, {{"orbits", gamma.group.orbits.size()}});
  report.add("order-power-of-two", lemma, gamma.order_is_power_of_two, {{"order", order}});
  const bool involutions = std::all_of(gamma.element_orders.begin(), gamma.element_orders.end(),
                                       [](const auto& kv) { return kv.first <= 2; });
  report.add("non-identity-involutions", lemma, involutions, {{"element_orders", orders}});
  if (gamma.fixed_point_bound) {
    report.add("fixed-point-bound", Severity::asserted, gamma.within_fixed_point_bound,
               {{"bound", to_json(*gamma.fixed_point_bound)}, {"fixed_points", fixed}});
  }
}

void cmd_related(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const auto fam = resolve_family(g, o, report);
  if (!fam || !require_diamond_free(g, report)) return;
  const Severity lemma = lemma_severity(*fam);
  if (!o.pair.empty()) {
    const Vertex x = checked_vertex(g, o.pair[0], "--pair"), y = checked_vertex(g, o.pair[1], "--pair");
    if (x == y) throw UsageError("--pair needs two distinct vertices");
    try {
      const RelatedSet rs = related_set(g, *fam, x, y);
      report.result() = {{"pair", {x, y}},
                         {"members", rs.members},
                         {"kind", rs.kind == RelatedKind::clique ? "clique" : "independent"}};
      report.add("related-set", lemma, true);
    } catch (const StructureError& e) {
      report.add("related-set", lemma, false, {{"error", e.what()}}, {{"vertices", e.witness()}});
    }
    return;
  }
  const RelatedPartitionReport p = related_partition(g, *fam);
  report.result() = {{"cliques", p.cliques}, {"independent_sets", p.independents}, {"pairs_covered", p.pairs_covered}};
  json detail{{"cliques", p.cliques}, {"independent_sets", p.independents}};
  if (p.failure) detail["error"] = *p.failure;
  report.add("related-partition", lemma, p.holds, detail,
             p.holds ? json(nullptr) : json{{"vertices", p.witness}, {"error", p.failure.value_or("")}});
}

void cmd_graph_to_pq(const Options& o, std::istream& in, Report& report) {
  const Graph g = load_graph(o, in, report);
  const SrgCheck c = check_srg(g);
  report.add("strongly-regular", Severity::asserted, c.params.has_value(),
             c.params ? json{{"parameters", to_json(*c.params)}} : json{{"reason", c.reason}},
             c.params ? json(nullptr) : json{{"vertices", c.witness}});
  if (!c.params || !require_diamond_free(g, report)) return;
  const IncidenceStructure inc = graph_to_pq(g);
  const PqAxiomReport ax = verify_pq_axioms(inc);
  report.add("pq-axioms", Severity::asserted, ax.params.has_value(), {{"lines", inc.num_lines()}},
             ax.params ? json(nullptr)
                       : json{{"axiom", ax.violated_axiom}, {"detail", ax.detail},
                              {"points", ax.witness_points}, {"lines", ax.witness_lines}});
  report.add("collinearity-round-trip", Severity::asserted, collinearity_graph(inc) == g);
  report.result() = {{"points", inc.num_points()},
                     {"lines", inc.num_lines()},
                     {"pq_parameters", ax.params ? to_json(*ax.params) : json(nullptr)}};
  if (!o.incidence_out.empty()) {
    std::ofstream f(o.incidence_out);
    if (!f) throw UsageError("cannot write " + o.incidence_out);
    write_incidence(f, inc);
  }
}

void cmd_pq_axioms(const Options& o, std::istream& in, Report& report) {
  const std::string text = read_text(o.file, in);
  std::istringstream ss(text);
  std::optional<IncidenceStructure> inc;
  try {
    inc.emplace(read_incidence(ss));
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  report.set_input({{"points", inc->num_points()}, {"lines", inc->num_lines()}, {"text_fnv1a64", hex64(fnv1a64(text))}});
  const PqAxiomReport ax = verify_pq_axioms(*inc);
  report.add("pq-axioms", Severity::asserted, ax.params.has_value(),
             ax.params ? json::object() : json{{"axiom", ax.violated_axiom}, {"detail", ax.detail}},
             ax.params ? json(nullptr)
                       : json{{"points", ax.witness_points}, {"lines", ax.witness_lines}, {"detail", ax.detail}});
  json& r = report.result();
  r["pq_parameters"] = ax.params ? to_json(*ax.params) : json(nullptr);
  if (ax.params) {
    const auto p = is_srg(collinearity_graph(*inc));
    r["collinearity_parameters"] = p ? to_json(*p) : json(nullptr);
  }
}

void cmd_diophantine(const Options& o, std::istream&, Report& report) {
  if (o.max < 1) throw UsageError("--max must be at least 1");
  std::vector<std::pair<std::int64_t, int>> sols;
  try {
    sols = solve_diophantine_17(o.max);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  json list = json::array();
  for (const auto& [n, t] : sols) list.push_back({{"n", n}, {"t", t}});
  report.result() = {{"n_max", o.max}, {"solutions", list}};
  const std::vector<std::pair<std::int64_t, int>> known{{1, 1}, {2, 3}, {3, 4}, {10, 7}};
  std::vector<std::pair<std::int64_t, int>> expected;
  for (const auto& s : known) {
    if (s.first <= o.max) expected.push_back(s);
  }
  json unexpected = json::array();
  for (const auto& s : sols) {
    if (std::find(expected.begin(), expected.end(), s) == expected.end()) unexpected.push_back({s.first, s.second});
  }
  report.add("known-solutions", Severity::asserted, sols == expected, {{"found", sols.size()}},
             sols == expected ? json(nullptr) : json{{"unexpected", unexpected}});
}

void cmd_certificate(const Options&, std::istream&, Report& report) {
  const CountingSystem cs = pq_3_35_20_certificate();
  std::vector<std::string> free_labels;
  for (auto f : cs.free_unknowns) free_labels.push_back(cs.unknowns[f]);
  json eqs = json::array();
  for (const auto& e : cs.equations) {
    AffineExpression lhs{0, {}};
    for (const auto& c : e.coefficients) lhs.coefficients.emplace_back(c);
    eqs.push_back(lhs.to_string(cs.unknowns) + " = " + exact::to_string(e.rhs));
  }
  json solved = json::object();
  for (std::size_t i = 0; i < cs.unknowns.size() && cs.consistent; ++i) {
    solved[cs.unknowns[i]] = cs.parametric_solution[i].to_string(free_labels);
  }
  report.result() = {{"parameters", to_json(SrgParams(676, 108, 2, 20))},
                     {"unknowns", cs.unknowns},
                     {"equations", eqs},
                     {"free", free_labels},
                     {"solved_form", solved},
                     {"feasibility", to_string(cs.feasibility)},
                     {"feasible", cs.feasible()},
                     {"explanation", cs.explanation}};
  json witness = nullptr;
  if (cs.witness) {
    witness = json::object();
    for (std::size_t i = 0; i < cs.unknowns.size(); ++i) witness[cs.unknowns[i]] = exact::to_string((*cs.witness)[i]);
  }
  report.add("back-substitution", Severity::asserted, verify_parametric_solution(cs), {{"equations", eqs.size()}});
  report.add("nonexistence", Severity::asserted, cs.feasibility == Feasibility::infeasible,
             {{"explanation", cs.explanation}}, witness);
}

void cmd_build(const Options& o, std::ostream& out) {
  Graph g;
  if (o.target == "rook4") g = build_rook4();
  else if (o.target == "shrikhande") g = build_shrikhande();
  else if (o.target == "gq35") g = build_gq35();
  else throw UsageError("unknown graph '" + o.target + "' (rook4, shrikhande, gq35)");
  out << serialize_graph6(g) << '\n';
}

using Command = std::function<void(const Options&, std::istream&, Report&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Diamond-free strongly regular graphs and partial quadrangles", "dfsrg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", o.n, "family parameter n (with --lambda) instead of detection");
  app.add_option("--lambda", o.lambda, "family parameter lambda (with --n)");
  app.add_flag("--timing", o.timing, "add wall-clock timing to the report");

  std::vector<std::pair<CLI::App*, Command>> commands;
  auto graph_cmd = [&](const std::string& name, const std::string& help, Command fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "graph6 input (default: standard input)");
    commands.emplace_back(sub, std::move(fn));
    return sub;
  };

  CLI::App* feas = app.add_subcommand("feasibility", "spectrum, family and bounds of (nu, k, lambda, mu)");
  feas->add_option("params", o.numbers, "nu k lambda mu")->required()->expected(4);
  commands.emplace_back(feas, cmd_feasibility);
  CLI::App* pqp = app.add_subcommand("pq-params", "SRG parameters of the collinearity graph of PQ(s, t, mu)");
  pqp->add_option("params", o.numbers, "s t mu")->required()->expected(3);
  commands.emplace_back(pqp, cmd_pq_params);
  CLI::App* build = app.add_subcommand("build", "emit a witness graph as graph6");
  build->add_option("graph", o.target, "rook4 | shrikhande | gq35")->required();

  graph_cmd("check-srg", "strong regularity and parameters", cmd_check_srg);
  graph_cmd("check-diamond-free", "search for an induced diamond", cmd_check_diamond_free);
  graph_cmd("local-stats", "m_i spectra, Phi/Psi partitions and matchings at one vertex", cmd_local_stats)
      ->add_option("--vertex", o.vertex, "base vertex (default 0)");
  graph_cmd("check-con", "condition (con): m_0 >= 1 for all non-adjacent pairs", cmd_check_con);
  graph_cmd("check-eq-pq", "the p/q relation for every triple", cmd_check_eq_pq);
  graph_cmd("check-star", "block inverse and the rank identity at every vertex", cmd_check_star);
  graph_cmd("sigma", "order-3 automorphisms and their normalized family", cmd_sigma)
      ->add_option("--base", o.vertex, "normalization vertex (default 0)");
  graph_cmd("group", "the group generated by sigma_u sigma_v^-1", cmd_group);
  graph_cmd("related", "related 4-sets", cmd_related)->add_option("--pair", o.pair, "x y")->expected(2);
  graph_cmd("graph-to-pq", "maximal-clique geometry and its axioms", cmd_graph_to_pq)
      ->add_option("--write-incidence", o.incidence_out, "write the incidence structure to a file");
  CLI::App* axioms = app.add_subcommand("pq-axioms", "verify an incidence file as a partial quadrangle");
  axioms->add_option("file", o.file, "incidence file (default: standard input)");
  commands.emplace_back(axioms, cmd_pq_axioms);
  CLI::App* dio = app.add_subcommand("diophantine", "solutions of (2n+3)^2 - 17 = 2^(t+2)");
  dio->add_option("--max", o.max, "largest n to search");
  commands.emplace_back(dio, cmd_diophantine);
  commands.emplace_back(app.add_subcommand("certificate-pq-3-35-20", "the counting system ruling out PQ(3,35,20)"),
                        cmd_certificate);

  std::vector<const char*> argv{"dfsrg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      cmd_build(o, out);
      return 0;
    }
    for (auto& [sub, fn] : commands) {
      if (!sub->parsed()) continue;
      const auto start = std::chrono::steady_clock::now();
      Report report(sub->get_name(), args);
      try {
        fn(o, in, report);
      } catch (const StructureError& e) {
        report.add("structure", Severity::asserted, false, {{"error", e.what()}}, {{"vertices", e.witness()}});
      } catch (const PreconditionError& e) {
        report.add("preconditions", Severity::asserted, false, {{"error", e.what()}}, {{"reason", e.what()}});
        report.reject();
      }
      std::optional<double> ms;
      if (o.timing) {
        ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      }
      return report.emit(out, ms);
    }
  } catch (const UsageError& e) {
    err << "dfsrg: " << e.what() << '\n';
    return 2;
  }
  err << "dfsrg: no command\n";
  return 2;
}

}  // namespace dfsrg::cli
