#pragma once

// Parameter calculus for strongly regular graphs and partial quadrangles.
// Everything here is exact: parameters are machine integers, all derived
// quantities are computed in arbitrary precision.

#include "dfsrg/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dfsrg {

/// (nu, k, lambda, mu) of a nontrivial strongly regular graph,
/// i.e. 0 < mu < k < nu - 1. The constructor enforces this.
class SrgParams {
 public:
  SrgParams(std::int64_t nu, std::int64_t k, std::int64_t lambda, std::int64_t mu);

  std::int64_t nu() const noexcept { return nu_; }
  std::int64_t k() const noexcept { return k_; }
  std::int64_t lambda() const noexcept { return lambda_; }
  std::int64_t mu() const noexcept { return mu_; }

  std::string to_string() const;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;

 private:
  std::int64_t nu_, k_, lambda_, mu_;
};

/// (s, t, mu) of a partial quadrangle: lines carry s+1 points, points lie on
/// t+1 lines, non-collinear points have mu common collinear points.
/// Enforces s >= 1, t >= 1, 1 <= mu <= t+1. Divisibility of s^2 t (t+1) by
/// mu is checked by pq_to_srg, which is where it matters.
class PqParams {
 public:
  PqParams(std::int64_t s, std::int64_t t, std::int64_t mu);

  std::int64_t s() const noexcept { return s_; }
  std::int64_t t() const noexcept { return t_; }
  std::int64_t mu() const noexcept { return mu_; }

  /// mu == t + 1
  bool is_generalized_quadrangle() const noexcept { return mu_ == t_ + 1; }

  std::string to_string() const;

  friend bool operator==(const PqParams&, const PqParams&) = default;

 private:
  std::int64_t s_, t_, mu_;
};

struct SpectrumReport {
  // Non-principal eigenvalues r > s_eig and their multiplicities f, g.
  // r and s_eig are absent when delta is irrational; f and g are absent when
  // delta is irrational and the parameters are not of conference type.
  std::optional<exact::Rational> r;
  std::optional<exact::Rational> s_eig;
  std::optional<exact::Rational> f;
  std::optional<exact::Rational> g;
  exact::Integer delta_squared;       // (lambda-mu)^2 + 4(k-mu)
  std::optional<exact::Integer> delta;
  bool is_conference = false;         // 2k + (nu-1)(lambda-mu) == 0
  bool integral = false;              // r, s_eig, f, g all integers
};

enum class FamilyKind { negative_latin_square, pseudo_latin_square };

/// Member of the family SRG((n^2+3n-l)^2, n(n^2+3n-l+1), l, n(n+1)).
struct FamilyInfo {
  std::int64_t n = 0;
  std::int64_t lambda = 0;
  FamilyKind kind = FamilyKind::negative_latin_square;

  /// The four parameters this (n, lambda) stands for.
  SrgParams params() const;

  friend bool operator==(const FamilyInfo&, const FamilyInfo&) = default;
};

/// Builds FamilyInfo for (n, lambda); kind follows the sign of n.
FamilyInfo family_member(std::int64_t n, std::int64_t lambda);

const char* to_string(FamilyKind kind);

SpectrumReport spectrum_of(const SrgParams& p);

/// Integer n with mu = n(n+1) reproducing all four parameters, if any. Both
/// roots of the quadratic are tried.
std::optional<FamilyInfo> detect_family(const SrgParams& p);

/// Throws std::domain_error when mu does not divide s^2 t (t+1), and
/// PreconditionError when the resulting tuple is a trivial SRG.
SrgParams pq_to_srg(const PqParams& q);

/// (lambda+1, k/(lambda+1) - 1, mu), or nullopt when lambda+1 does not divide k
/// or the result is not a valid PqParams.
std::optional<PqParams> srg_to_pq_params(const SrgParams& p);

struct FixedPointBound {
  exact::Rational bound;     // nu * max(lambda, mu) / (k - r)
  exact::Rational quarter;   // nu / 4
  bool within_quarter = false;
};

/// Upper bound on the number of fixed points of a nontrivial automorphism.
/// Throws PreconditionError unless the spectrum is integral (this excludes
/// conference parameters with irrational r).
FixedPointBound fixed_point_bound(const SrgParams& p);

/// Default search limit for solve_diophantine_17.
inline constexpr std::int64_t kDiophantineDefaultMax = 1'000'000;

/// All (n, t) with 1 <= n <= n_max, t >= 0 and (2n+3)^2 = 2^(t+2) + 17.
/// Exhaustive, so complete only up to n_max.
std::vector<std::pair<std::int64_t, int>> solve_diophantine_17(std::int64_t n_max);

}  // namespace dfsrg
