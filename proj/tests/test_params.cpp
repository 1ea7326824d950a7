#include "dfsrg/errors.hpp"
#include "dfsrg/params.hpp"

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

using namespace dfsrg;
using exact::Rational;

namespace {

// Independent oracle: eigenvalues of an SRG are roots of x^2 - (l-m)x - (k-m).
// Checks r, s by substitution and f, g by the trace equations.
void check_spectrum_by_substitution(const SrgParams& p, const SpectrumReport& s) {
  REQUIRE(s.r);
  REQUIRE(s.s_eig);
  for (const Rational& x : {*s.r, *s.s_eig}) {
    CHECK(x * x - Rational(p.lambda() - p.mu()) * x - Rational(p.k() - p.mu()) == 0);
  }
  CHECK(*s.f + *s.g == Rational(p.nu() - 1));
  CHECK(Rational(p.k()) + *s.f * *s.r + *s.g * *s.s_eig == 0);
}

}  // namespace

TEST_CASE("SrgParams rejects trivial tuples") {
  CHECK_THROWS_AS(SrgParams(16, 6, 2, 0), PreconditionError);
  CHECK_THROWS_AS(SrgParams(16, 15, 14, 15), PreconditionError);
  CHECK_THROWS_AS(SrgParams(16, 6, -1, 2), PreconditionError);
  CHECK_NOTHROW(SrgParams(10, 3, 0, 1));
}

TEST_CASE("family members evaluate the closed form") {
  CHECK(family_member(-2, 2).params() == SrgParams(16, 6, 2, 2));
  CHECK(family_member(2, 2).params() == SrgParams(64, 18, 2, 6));
  CHECK(family_member(3, 2).params() == SrgParams(256, 51, 2, 12));
  CHECK(family_member(4, 2).params() == SrgParams(676, 108, 2, 20));
  CHECK(family_member(10, 2).params() == SrgParams(16384, 1290, 2, 110));
  CHECK(family_member(1, 0).params() == SrgParams(16, 5, 0, 2));
  CHECK_THROWS_AS(family_member(0, 2).params(), PreconditionError);
}

TEST_CASE("spectra of the witness and open parameter sets") {
  const SrgParams gq(64, 18, 2, 6);
  const auto s = spectrum_of(gq);
  check_spectrum_by_substitution(gq, s);
  CHECK(*s.r == 2);
  CHECK(*s.s_eig == -6);
  CHECK(*s.f == 45);
  CHECK(*s.g == 18);
  CHECK(s.integral);

  for (const SrgParams& p : {SrgParams(256, 51, 2, 12), SrgParams(676, 108, 2, 20), SrgParams(16384, 1290, 2, 110)}) {
    const auto sp = spectrum_of(p);
    check_spectrum_by_substitution(p, sp);
    CHECK(sp.integral);
    CHECK(*sp.g == p.k());
  }
  const auto s10 = spectrum_of(SrgParams(16384, 1290, 2, 110));
  CHECK(*s10.delta == 128);
  CHECK(*s10.r == 10);
  CHECK(*s10.s_eig == -118);
}

TEST_CASE("conference and irrational spectra") {
  const auto pentagon = spectrum_of(SrgParams(13, 6, 2, 3));
  CHECK(pentagon.is_conference);
  CHECK_FALSE(pentagon.delta.has_value());
  CHECK_FALSE(pentagon.integral);
  CHECK(*pentagon.f == 6);
  CHECK(*pentagon.g == 6);

  const auto petersen = spectrum_of(SrgParams(10, 3, 0, 1));
  check_spectrum_by_substitution(SrgParams(10, 3, 0, 1), petersen);
  CHECK(petersen.integral);
}

TEST_CASE("detect_family finds both signs of n") {
  CHECK(detect_family(SrgParams(64, 18, 2, 6))->n == 2);
  CHECK(detect_family(SrgParams(256, 51, 2, 12))->n == 3);
  CHECK(detect_family(SrgParams(676, 108, 2, 20))->n == 4);
  CHECK(detect_family(SrgParams(16384, 1290, 2, 110))->n == 10);
  const auto rook = detect_family(SrgParams(16, 6, 2, 2));
  REQUIRE(rook);
  CHECK(rook->n == -2);
  CHECK(rook->kind == FamilyKind::pseudo_latin_square);
  const auto rook6 = detect_family(SrgParams(36, 10, 4, 2));
  REQUIRE(rook6);
  CHECK(rook6->n == -2);
  CHECK(rook6->lambda == 4);
  CHECK_FALSE(detect_family(SrgParams(10, 3, 0, 1)).has_value());
  CHECK_FALSE(detect_family(SrgParams(27, 10, 1, 5)).has_value());
}

TEST_CASE("partial quadrangle and SRG parameters correspond") {
  CHECK(pq_to_srg(PqParams(3, 5, 6)) == SrgParams(64, 18, 2, 6));
  CHECK(pq_to_srg(PqParams(3, 35, 20)) == SrgParams(676, 108, 2, 20));
  CHECK(pq_to_srg(PqParams(1, 1, 1)) == SrgParams(5, 2, 0, 1));
  CHECK(pq_to_srg(PqParams(3, 16, 12)) == SrgParams(256, 51, 2, 12));
  CHECK_THROWS_AS(pq_to_srg(PqParams(1, 4, 3)), std::domain_error);
  CHECK_THROWS_AS(pq_to_srg(PqParams(1, 1, 2)), PreconditionError);
  CHECK_THROWS_AS(PqParams(3, 5, 7), PreconditionError);
  CHECK(PqParams(3, 5, 6).is_generalized_quadrangle());
  CHECK_FALSE(PqParams(3, 35, 20).is_generalized_quadrangle());

  CHECK(srg_to_pq_params(SrgParams(676, 108, 2, 20)) == PqParams(3, 35, 20));
  CHECK(srg_to_pq_params(SrgParams(64, 18, 2, 6)) == PqParams(3, 5, 6));
  // the round trip holds whenever both directions are defined
  for (const auto& q : {PqParams(3, 5, 6), PqParams(3, 35, 20), PqParams(2, 2, 1), PqParams(3, 16, 12)}) {
    CHECK(srg_to_pq_params(pq_to_srg(q)) == q);
  }
}

TEST_CASE("fixed point bound") {
  CHECK(fixed_point_bound(SrgParams(64, 18, 2, 6)).bound == 24);
  const auto b3 = fixed_point_bound(SrgParams(256, 51, 2, 12));
  CHECK(b3.bound == 64);
  CHECK(b3.quarter == 64);
  CHECK(b3.within_quarter);
  CHECK(fixed_point_bound(SrgParams(16384, 1290, 2, 110)).bound == 128 * 11);
  CHECK_THROWS_AS(fixed_point_bound(SrgParams(13, 6, 2, 3)), PreconditionError);

  // for lambda = 2, n >= 3: bound = (n^2+3n-2)(n+1) <= nu/4
  for (std::int64_t n = 3; n <= 40; ++n) {
    const auto b = fixed_point_bound(family_member(n, 2).params());
    CHECK(b.bound == Rational((n * n + 3 * n - 2) * (n + 1)));
    CHECK(b.within_quarter);
  }
}

TEST_CASE("diophantine search against a big-integer oracle") {
  using boost::multiprecision::cpp_int;
  std::vector<std::pair<std::int64_t, int>> oracle;
  for (std::int64_t n = 1; n <= 20000; ++n) {
    const cpp_int v = cpp_int(2 * n + 3) * (2 * n + 3) - 17;
    if (v > 0 && (v & (v - 1)) == 0) {
      const int e = static_cast<int>(boost::multiprecision::msb(v));
      if (e >= 2) oracle.emplace_back(n, e - 2);
    }
  }
  CHECK(solve_diophantine_17(20000) == oracle);
  const std::vector<std::pair<std::int64_t, int>> expected{{1, 1}, {2, 3}, {3, 4}, {10, 7}};
  CHECK(solve_diophantine_17(kDiophantineDefaultMax) == expected);
  CHECK(solve_diophantine_17(9) == std::vector<std::pair<std::int64_t, int>>{{1, 1}, {2, 3}, {3, 4}});
  CHECK_THROWS_AS(solve_diophantine_17(0), PreconditionError);
}
