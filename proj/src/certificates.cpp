#include "dfsrg/certificates.hpp"

#include "dfsrg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace dfsrg {

using exact::Integer;
using exact::Rational;

Rational AffineExpression::evaluate(const std::vector<Rational>& params) const {
  Rational v = constant;
  for (std::size_t j = 0; j < coefficients.size(); ++j) v += coefficients[j] * params.at(j);
  return v;
}

std::string AffineExpression::to_string(const std::vector<std::string>& param_labels) const {
  std::string out;
  if (constant != 0) out = exact::to_string(constant);
  for (std::size_t j = 0; j < coefficients.size(); ++j) {
    const Rational& c = coefficients[j];
    if (c == 0) continue;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out = "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += exact::to_string(mag) + "*";
    out += param_labels.at(j);
  }
  return out.empty() ? "0" : out;
}

const char* to_string(Feasibility f) {
  switch (f) {
    case Feasibility::feasible: return "feasible";
    case Feasibility::infeasible: return "infeasible";
    case Feasibility::undecided: return "undecided";
  }
  return "?";
}

namespace {

Integer lcm_of_denominators(const std::vector<AffineExpression>& exprs) {
  Integer l = 1;
  for (const auto& e : exprs) {
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(e.constant));
    for (const auto& c : e.coefficients) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c));
  }
  return l;
}

std::optional<std::vector<Integer>> integral_point(const std::vector<AffineExpression>& exprs,
                                                   const std::vector<Rational>& params) {
  std::vector<Integer> values;
  for (const auto& e : exprs) {
    const Rational v = e.evaluate(params);
    if (v < 0 || !exact::is_integer(v)) return std::nullopt;
    values.push_back(boost::multiprecision::numerator(v));
  }
  return values;
}

// Decides nonnegative integer feasibility with at most one free parameter.
void decide(CountingSystem& sys) {
  const auto& exprs = sys.parametric_solution;
  const auto& labels = sys.unknowns;
  std::vector<std::string> params;
  for (auto f : sys.free_unknowns) params.push_back(labels[f]);

  if (sys.free_unknowns.empty()) {
    sys.witness = integral_point(exprs, {});
    sys.feasibility = sys.witness ? Feasibility::feasible : Feasibility::infeasible;
    sys.explanation = sys.witness ? "unique solution is a nonnegative integer vector"
                                  : "unique solution is not a nonnegative integer vector";
    return;
  }
  if (sys.free_unknowns.size() > 1) {
    sys.feasibility = Feasibility::undecided;
    sys.explanation = std::to_string(sys.free_unknowns.size()) + " free parameters; no search attempted";
    return;
  }

  // Feasible parameter range [lo, hi] from c + a*t >= 0 for every unknown.
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < exprs.size(); ++i) {
    const Rational& c = exprs[i].constant;
    const Rational& a = exprs[i].coefficients[0];
    if (a == 0) {
      if (c < 0) {
        sys.feasibility = Feasibility::infeasible;
        sys.explanation = labels[i] + " = " + exprs[i].to_string(params) + " < 0";
        return;
      }
      continue;
    }
    const Rational root = -c / a;
    if (a > 0) {
      if (!lo || root > *lo) lo = root;
    } else {
      if (!hi || root < *hi) hi = root;
    }
  }
  // The free unknown itself contributes t >= 0, so lo is always set.
  const Integer first = exact::ceil(*lo);
  if (hi && Rational(first) > *hi) {
    sys.feasibility = Feasibility::infeasible;
    for (std::size_t i = 0; i < exprs.size(); ++i) {
      const auto& e = exprs[i];
      if (e.constant < 0 && e.coefficients[0] < 0) {
        sys.explanation = labels[i] + " = " + e.to_string(params) + " < 0 for every " + params[0] + " >= 0";
        return;
      }
    }
    sys.explanation = "no " + params[0] + " makes every unknown nonnegative";
    return;
  }
  // Integrality is periodic in t with period dividing the common denominator.
  const Integer period = lcm_of_denominators(exprs);
  Integer last = first + period - 1;
  if (hi) last = std::min(last, exact::floor(*hi));
  for (Integer t = first; t <= last; ++t) {
    if (auto w = integral_point(exprs, {Rational(t)})) {
      sys.witness = std::move(w);
      sys.feasibility = Feasibility::feasible;
      sys.explanation = params[0] + " = " + exact::to_string(t) + " gives a nonnegative integer solution";
      return;
    }
  }
  sys.feasibility = Feasibility::infeasible;
  sys.explanation = "no integer " + params[0] + " in the nonnegative range gives integral unknowns";
}

}  // namespace

CountingSystem solve_counting_system(std::vector<LinearEquation> equations, std::vector<std::string> unknowns) {
  const std::size_t n = unknowns.size(), m = equations.size();
  for (const auto& eq : equations) {
    if (eq.coefficients.size() != n) throw PreconditionError("equation width does not match the unknowns");
  }
  CountingSystem sys;
  sys.unknowns = std::move(unknowns);
  sys.equations = std::move(equations);

  exact::RationalMatrix aug(m, n + 1);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = Rational(sys.equations[r].coefficients[c]);
    aug(r, n) = Rational(sys.equations[r].rhs);
  }
  const exact::RowReduction red = exact::row_reduce(aug);

  for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) {
    if (red.pivot_columns[r] == n) {
      sys.consistent = false;
      sys.feasibility = Feasibility::infeasible;
      for (std::size_t j = 0; j < m; ++j) sys.inconsistency_certificate.push_back(red.transform(r, j));
      sys.explanation = "a rational combination of the equations gives 0 = " + exact::to_string(red.reduced(r, n));
      return sys;
    }
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) sys.free_unknowns.push_back(c);
  }
  const std::size_t f = sys.free_unknowns.size();
  sys.parametric_solution.assign(n, AffineExpression{0, std::vector<Rational>(f, 0)});
  for (std::size_t j = 0; j < f; ++j) sys.parametric_solution[sys.free_unknowns[j]].coefficients[j] = 1;
  for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) {
    auto& e = sys.parametric_solution[red.pivot_columns[r]];
    e.constant = red.reduced(r, n);
    for (std::size_t j = 0; j < f; ++j) e.coefficients[j] = -red.reduced(r, sys.free_unknowns[j]);
  }
  decide(sys);
  return sys;
}

bool verify_parametric_solution(const CountingSystem& sys) {
  if (!sys.consistent) return false;
  const std::size_t f = sys.free_unknowns.size();
  for (const auto& eq : sys.equations) {
    Rational constant = 0;
    std::vector<Rational> coeff(f, 0);
    for (std::size_t i = 0; i < eq.coefficients.size(); ++i) {
      const Rational a(eq.coefficients[i]);
      constant += a * sys.parametric_solution[i].constant;
      for (std::size_t j = 0; j < f; ++j) coeff[j] += a * sys.parametric_solution[i].coefficients[j];
    }
    if (constant != Rational(eq.rhs)) return false;
    if (std::any_of(coeff.begin(), coeff.end(), [](const Rational& c) { return c != 0; })) return false;
  }
  return true;
}

bool verify_inconsistency_certificate(const CountingSystem& sys) {
  const auto& y = sys.inconsistency_certificate;
  if (sys.consistent || y.size() != sys.equations.size()) return false;
  const std::size_t n = sys.unknowns.size();
  for (std::size_t c = 0; c < n; ++c) {
    Rational s = 0;
    for (std::size_t r = 0; r < y.size(); ++r) s += y[r] * Rational(sys.equations[r].coefficients[c]);
    if (s != 0) return false;
  }
  Rational rhs = 0;
  for (std::size_t r = 0; r < y.size(); ++r) rhs += y[r] * Rational(sys.equations[r].rhs);
  return rhs != 0;
}

CountingSystem pq_3_35_20_certificate() {
  // For non-adjacent u, v and a triangle {v, v', v''} outside N(u): s_i counts
  // triangles in N(u) joined to it by exactly i edges. Constants are for
  // (676,108,2,20) only.
  std::vector<LinearEquation> eqs{
      {{1, 1, 1, 1}, 35},
      {{0, 1, 2, 3}, 57},
      {{0, 0, 1, 3}, 21},
  };
  return solve_counting_system(std::move(eqs), {"s_0", "s_1", "s_2", "s_3"});
}

}  // namespace dfsrg
