#include "dfsrg/params.hpp"

#include "dfsrg/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dfsrg {

using exact::Integer;
using exact::Rational;

SrgParams::SrgParams(std::int64_t nu, std::int64_t k, std::int64_t lambda, std::int64_t mu)
    : nu_(nu), k_(k), lambda_(lambda), mu_(mu) {
  if (lambda < 0 || !(0 < mu && mu < k && k < nu - 1)) {
    throw PreconditionError("not a nontrivial SRG parameter set (need 0 < mu < k < nu-1, lambda >= 0): " +
                            to_string());
  }
}

std::string SrgParams::to_string() const {
  return "(" + std::to_string(nu_) + "," + std::to_string(k_) + "," + std::to_string(lambda_) + "," +
         std::to_string(mu_) + ")";
}

PqParams::PqParams(std::int64_t s, std::int64_t t, std::int64_t mu) : s_(s), t_(t), mu_(mu) {
  if (s < 1 || t < 1 || mu < 1 || mu > t + 1) {
    throw PreconditionError("not a partial quadrangle parameter set (need s,t >= 1, 1 <= mu <= t+1): " +
                            to_string());
  }
}

std::string PqParams::to_string() const {
  return "(" + std::to_string(s_) + "," + std::to_string(t_) + "," + std::to_string(mu_) + ")";
}

SrgParams FamilyInfo::params() const {
  const std::int64_t m = n * n + 3 * n - lambda;
  return SrgParams(m * m, n * (m + 1), lambda, n * (n + 1));
}

FamilyInfo family_member(std::int64_t n, std::int64_t lambda) {
  return FamilyInfo{n, lambda, n > 0 ? FamilyKind::negative_latin_square : FamilyKind::pseudo_latin_square};
}

const char* to_string(FamilyKind kind) {
  return kind == FamilyKind::negative_latin_square ? "negative-latin-square" : "pseudo-latin-square";
}

SpectrumReport spectrum_of(const SrgParams& p) {
  const Integer nu = p.nu(), k = p.k(), lambda = p.lambda(), mu = p.mu();
  SpectrumReport out;
  out.delta_squared = (lambda - mu) * (lambda - mu) + 4 * (k - mu);
  out.delta = exact::exact_sqrt(out.delta_squared);
  const Integer skew = 2 * k + (nu - 1) * (lambda - mu);
  out.is_conference = skew == 0;

  if (out.delta) {
    const Rational delta(*out.delta);
    out.r = (Rational(lambda - mu) + delta) / 2;
    out.s_eig = (Rational(lambda - mu) - delta) / 2;
    out.f = Rational(nu - 1) / 2 - Rational(skew) / (2 * delta);
    out.g = Rational(nu - 1) / 2 + Rational(skew) / (2 * delta);
  } else if (out.is_conference) {
    out.f = Rational(nu - 1) / 2;
    out.g = out.f;
  }
  out.integral = out.r && out.s_eig && out.f && out.g && exact::is_integer(*out.r) &&
                 exact::is_integer(*out.s_eig) && exact::is_integer(*out.f) && exact::is_integer(*out.g);
  return out;
}

std::optional<FamilyInfo> detect_family(const SrgParams& p) {
  const auto disc = exact::exact_sqrt(Integer(1) + 4 * Integer(p.mu()));
  if (!disc) return std::nullopt;
  // mu = n(n+1) has roots n0 = (disc-1)/2 and -n0-1; disc is odd.
  const auto n0 = static_cast<std::int64_t>((*disc - 1) / 2);
  for (std::int64_t n : {n0, -n0 - 1}) {
    const Integer m = Integer(n) * n + 3 * Integer(n) - p.lambda();
    if (m * m == p.nu() && Integer(n) * (m + 1) == p.k()) return family_member(n, p.lambda());
  }
  return std::nullopt;
}

SrgParams pq_to_srg(const PqParams& q) {
  const Integer s = q.s(), t = q.t(), mu = q.mu();
  const Integer top = s * s * t * (t + 1);
  if (top % mu != 0) {
    throw std::domain_error("mu does not divide s^2 t (t+1) for PQ" + q.to_string() +
                            "; no collinearity graph parameters exist");
  }
  const Integer nu = 1 + s * (t + 1) + top / mu;
  return SrgParams(static_cast<std::int64_t>(nu), static_cast<std::int64_t>(s * (t + 1)), q.s() - 1, q.mu());
}

std::optional<PqParams> srg_to_pq_params(const SrgParams& p) {
  const std::int64_t line = p.lambda() + 1;
  if (p.k() % line != 0) return std::nullopt;
  const std::int64_t t = p.k() / line - 1;
  if (t < 1 || p.lambda() < 0 || p.mu() > t + 1) return std::nullopt;
  return PqParams(p.lambda() + 1, t, p.mu());
}

FixedPointBound fixed_point_bound(const SrgParams& p) {
  const SpectrumReport sp = spectrum_of(p);
  if (!sp.integral) {
    throw PreconditionError("fixed point bound needs an integral spectrum; " + p.to_string() +
                            (sp.is_conference ? " is a conference parameter set" : " is not feasible"));
  }
  FixedPointBound out;
  out.bound = Rational(Integer(p.nu()) * std::max(p.lambda(), p.mu())) / (Rational(p.k()) - *sp.r);
  out.quarter = Rational(p.nu(), 4);
  out.within_quarter = out.bound <= out.quarter;
  return out;
}

__extension__ typedef unsigned __int128 u128;

std::vector<std::pair<std::int64_t, int>> solve_diophantine_17(std::int64_t n_max) {
  if (n_max < 1) throw PreconditionError("solve_diophantine_17: n_max must be >= 1");
  // (2n+3)^2 must fit in 128 bits with room to spare.
  if (n_max > (std::int64_t{1} << 60)) throw PreconditionError("solve_diophantine_17: n_max too large");

  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const u128 odd = 2 * static_cast<u128>(n) + 3;
    const u128 rest = odd * odd - 17;  // odd >= 5, so no underflow
    const auto hi = static_cast<std::uint64_t>(rest >> 64);
    const auto lo = static_cast<std::uint64_t>(rest);
    int exponent = -1;
    if (hi == 0 && std::has_single_bit(lo)) exponent = std::countr_zero(lo);
    else if (lo == 0 && std::has_single_bit(hi)) exponent = 64 + std::countr_zero(hi);
    if (exponent >= 2) out.emplace_back(n, exponent - 2);
  }
  return out;
}

}  // namespace dfsrg
