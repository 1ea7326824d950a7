#include "dfsrg/certificates.hpp"
#include "dfsrg/errors.hpp"

#include <doctest.h>

using namespace dfsrg;
using exact::Integer;
using exact::Rational;

TEST_CASE("the PQ(3,35,20) system has no nonnegative solution") {
  const CountingSystem cs = pq_3_35_20_certificate();
  CHECK(cs.unknowns == std::vector<std::string>{"s_0", "s_1", "s_2", "s_3"});
  REQUIRE(cs.consistent);
  CHECK(cs.free_unknowns == std::vector<std::size_t>{3});
  REQUIRE(cs.parametric_solution.size() == 4);
  const std::vector<std::string> free{"s_3"};
  CHECK(cs.parametric_solution[0].to_string(free) == "-1 - s_3");
  CHECK(cs.parametric_solution[1].to_string(free) == "15 + 3*s_3");
  CHECK(cs.parametric_solution[2].to_string(free) == "21 - 3*s_3");
  CHECK(cs.parametric_solution[3].to_string(free) == "s_3");
  CHECK(cs.parametric_solution[0].constant == -1);
  CHECK(cs.parametric_solution[0].coefficients[0] == -1);
  CHECK(cs.feasibility == Feasibility::infeasible);
  CHECK_FALSE(cs.feasible());
  CHECK_FALSE(cs.witness.has_value());
  CHECK(verify_parametric_solution(cs));
  CHECK(cs.explanation.find("s_0") != std::string::npos);
}

TEST_CASE("the solved form satisfies the equations at sample points") {
  const CountingSystem cs = pq_3_35_20_certificate();
  for (int t : {0, 1, 7, -3}) {
    std::vector<Rational> x;
    for (const auto& e : cs.parametric_solution) x.push_back(e.evaluate({Rational(t)}));
    CHECK(x[0] + x[1] + x[2] + x[3] == 35);
    CHECK(x[1] + 2 * x[2] + 3 * x[3] == 57);
    CHECK(x[2] + 3 * x[3] == 21);
    if (t == 0) CHECK(x[0] == -1);
  }
}

TEST_CASE("a uniquely determined feasible system") {
  const CountingSystem cs = solve_counting_system({{{1}, 5}}, {"s_0"});
  CHECK(cs.feasible());
  REQUIRE(cs.witness.has_value());
  CHECK((*cs.witness)[0] == 5);
  CHECK(cs.free_unknowns.empty());
}

TEST_CASE("an inconsistent system comes with a certificate") {
  const CountingSystem cs = solve_counting_system({{{1, 1}, 1}, {{1, 1}, 2}}, {"s_0", "s_1"});
  CHECK_FALSE(cs.consistent);
  CHECK(cs.feasibility == Feasibility::infeasible);
  CHECK(cs.parametric_solution.empty());
  CHECK(verify_inconsistency_certificate(cs));
  CHECK_FALSE(verify_parametric_solution(cs));
}

TEST_CASE("one free parameter: integrality and bounds are decided") {
  // 2 x0 + x1 = 3 -> x0 = (3 - x1)/2: x1 = 1 gives (1, 1)
  const CountingSystem a = solve_counting_system({{{2, 1}, 3}}, {"x0", "x1"});
  CHECK(a.feasible());
  REQUIRE(a.witness.has_value());
  CHECK((*a.witness)[0] * 2 + (*a.witness)[1] == 3);

  // 2 x0 + 2 x1 = 3 has no integer solution at all
  const CountingSystem b = solve_counting_system({{{2, 2}, 3}}, {"x0", "x1"});
  CHECK(b.feasibility == Feasibility::infeasible);

  // x0 - x1 = 4: unbounded above but feasible
  const CountingSystem c = solve_counting_system({{{1, -1}, 4}}, {"x0", "x1"});
  CHECK(c.feasible());
}

TEST_CASE("more than one free parameter is undecided") {
  const CountingSystem cs = solve_counting_system({{{1, 1, 1}, 3}}, {"a", "b", "c"});
  CHECK(cs.feasibility == Feasibility::undecided);
  CHECK(cs.free_unknowns.size() == 2);
  CHECK(verify_parametric_solution(cs));
}

TEST_CASE("width mismatch is a precondition error") {
  CHECK_THROWS_AS(solve_counting_system({{{1, 1}, 1}}, {"a"}), PreconditionError);
}
