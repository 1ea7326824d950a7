#pragma once

// Exact solution of small integer linear systems over the rationals with a
// nonnegative-integer feasibility decision, and the fixed counting system
// that rules out PQ(3,35,20).

#include "dfsrg/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dfsrg {

struct LinearEquation {
  std::vector<exact::Integer> coefficients;  // one per unknown
  exact::Integer rhs;
};

/// constant + sum_j coefficients[j] * (free parameter j)
struct AffineExpression {
  exact::Rational constant;
  std::vector<exact::Rational> coefficients;

  exact::Rational evaluate(const std::vector<exact::Rational>& params) const;
  std::string to_string(const std::vector<std::string>& param_labels) const;
};

enum class Feasibility { feasible, infeasible, undecided };

const char* to_string(Feasibility f);

struct CountingSystem {
  std::vector<std::string> unknowns;
  std::vector<LinearEquation> equations;

  bool consistent = true;
  std::vector<std::size_t> free_unknowns;           // indices into unknowns, ascending
  std::vector<AffineExpression> parametric_solution;  // one per unknown; empty when inconsistent

  /// For an inconsistent system: y with y*A == 0 and y*b != 0.
  std::vector<exact::Rational> inconsistency_certificate;

  Feasibility feasibility = Feasibility::undecided;
  std::optional<std::vector<exact::Integer>> witness;  // a nonnegative integer solution
  std::string explanation;

  bool feasible() const noexcept { return feasibility == Feasibility::feasible; }
};

/// Throws PreconditionError if an equation's width differs from unknowns.size().
CountingSystem solve_counting_system(std::vector<LinearEquation> equations, std::vector<std::string> unknowns);

/// Substitutes the parametric solution into every equation and checks that
/// constant and parameter coefficients cancel identically.
bool verify_parametric_solution(const CountingSystem& system);

/// For an inconsistent system, checks y*A == 0 and y*b != 0.
bool verify_inconsistency_certificate(const CountingSystem& system);

/// The s_0..s_3 system for a vertex pair of a putative PQ(3,35,20).
CountingSystem pq_3_35_20_certificate();

}  // namespace dfsrg
