#include "doctest.h"
#include "sia/algebra/groebner.hpp"
#include "sia/algebra/parse.hpp"

using namespace sia::algebra;

namespace {

std::vector<QPoly> polys(const RingPtr& r, std::initializer_list<const char*> src) {
  std::vector<QPoly> out;
  for (auto s : src) out.push_back(parse_poly(r, s));
  return out;
}

}  // namespace

TEST_CASE("circle meets diagonal under lex") {
  auto r = make_ring({"x", "y"}, TermOrder::lex(2));
  auto gb = groebner(r, polys(r, {"x^2 + y^2 - 1", "x - y"}));
  REQUIRE(gb.size() == 2);
  CHECK(to_string(gb.polys[0]) == "y^2 - 1/2");
  CHECK(to_string(gb.polys[1]) == "x - y");
}

TEST_CASE("inconsistent system gives the unit ideal") {
  auto r = make_ring({"x"});
  auto gb = groebner(r, polys(r, {"x - 1", "x - 2"}));
  CHECK(gb.is_unit());
  CHECK(solution_count(gb) == SolutionCount::finite_count(0));
}

TEST_CASE("normal form modulo a basis") {
  auto r = make_ring({"x", "y"}, TermOrder::lex(2));
  auto gb = groebner(r, polys(r, {"x^2 + y^2 - 1", "x - y"}));
  CHECK(to_string(normal_form(parse_poly(r, "x^2 + y^2"), gb)) == "1");
  CHECK(ideal_contains(gb, parse_poly(r, "x^2 - y^2")));
}

TEST_CASE("solution counts") {
  auto r1 = make_ring({"x"});
  CHECK(solution_count(groebner(r1, polys(r1, {"x - 3"}))) == SolutionCount::finite_count(1));
  CHECK(solution_count(groebner(r1, polys(r1, {"x^2 - 1"}))) == SolutionCount::finite_count(2));
  auto r2 = make_ring({"x", "y"});
  CHECK_FALSE(solution_count(groebner(r2, polys(r2, {"x*y"}))).finite);
}

TEST_CASE("minimal polynomial and distinct values") {
  auto r = make_ring({"x"});
  auto gb = groebner(r, polys(r, {"x^2 - 2*x + 1"}));
  auto mp = minimal_polynomial(0, gb);
  CHECK(to_string(mp) == "x^2 - 2*x + 1");
  auto dense = minimal_polynomial_of(q_var(r, 0), gb);
  REQUIRE(dense);
  CHECK(distinct_root_count(*dense) == 1);
}

TEST_CASE("cyclic-4 is positive dimensional") {
  auto r = make_ring({"a", "b", "c", "d"});
  auto gb = groebner(r, polys(r, {"a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b",
                                  "a*b*c*d - 1"}));
  CHECK_FALSE(gb.is_unit());
  CHECK_FALSE(is_zero_dimensional(gb));
  for (auto& g : polys(r, {"a + b + c + d", "a*b*c*d - 1"})) CHECK(ideal_contains(gb, g));
}

TEST_CASE("step budget is enforced") {
  auto r = make_ring({"a", "b", "c", "d", "e"});
  GroebnerOptions opt;
  opt.max_steps = 10;
  CHECK_THROWS_AS(groebner(r,
                           polys(r, {"a + b + c + d + e", "a*b + b*c + c*d + d*e + e*a",
                                     "a*b*c + b*c*d + c*d*e + d*e*a + e*a*b",
                                     "a*b*c*d + b*c*d*e + c*d*e*a + d*e*a*b + e*a*b*c", "a*b*c*d*e - 1"}),
                           opt),
                  ResourceLimit);
}
