#include <random>

#include "doctest.h"
#include "sia/algebra/gcd.hpp"
#include "sia/algebra/parse.hpp"
#include "sia/algebra/ratfun.hpp"

using namespace sia::algebra;

TEST_CASE("polynomial arithmetic basics") {
  auto r = make_ring({"x", "y"});
  auto p = [&](const char* s) { return parse_poly(r, s); };
  CHECK(p("(x + y)^2") == p("x^2 + 2*x*y + y^2"));
  CHECK(p("x^2*y").derivative(0) == p("2*x*y"));
  CHECK(p("x^2 - y^2").divide_exact(p("x - y")) == p("x + y"));
  CHECK_THROWS_AS(p("x^2 + 1").divide_exact(p("x - y")), DivisionNotExact);
}

TEST_CASE("gcd of multivariate polynomials") {
  auto r = make_ring({"a", "b", "c"});
  auto p = [&](const char* s) { return parse_poly(r, s); };
  CHECK(gcd(p("(a + b)*(a - c)^2"), p("(a - c)*(b + 2*c)")) == p("a - c"));
  CHECK(gcd(p("6*a*b"), p("4*a^2")) == p("a"));
  CHECK(gcd(p("a^2 + 1"), p("b")) == p("1"));
  CHECK(gcd(p("(a*b + c)^3*(a+1)"), p("(a*b + c)^2*(a-1)")) == p("(a*b + c)^2"));
}

TEST_CASE("gcd agrees with a planted common factor on random inputs") {
  auto r = make_ring({"a", "b", "c", "d"});
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), ex(0, 2);
  auto rnd = [&](int terms) {
    QPoly acc(r);
    for (int t = 0; t < terms; ++t) {
      std::vector<Exponent> e(4);
      for (auto& x : e) x = static_cast<Exponent>(ex(rng));
      acc += QPoly::monomial(r, Rational(coef(rng)), r->monomial(e));
    }
    return acc;
  };
  for (int trial = 0; trial < 40; ++trial) {
    QPoly g = rnd(3), u = rnd(3), v = rnd(3);
    if (g.is_zero() || u.is_zero() || v.is_zero()) continue;
    QPoly h = gcd(g * u, g * v);
    // h is a multiple of g's primitive part and divides both products
    CHECK_NOTHROW((void)(g * u).divide_exact(h));
    CHECK_NOTHROW((void)(g * v).divide_exact(h));
    CHECK_NOTHROW((void)h.divide_exact(gcd(g, g)));
  }
}

TEST_CASE("rational functions are canonical") {
  auto r = make_ring({"k5", "k7"});
  auto f = RatFun(parse_poly(r, "k5*k7"), parse_poly(r, "k7^2"));
  CHECK(f.str() == "k5/k7");
  auto a = RatFun(parse_poly(r, "1"), parse_poly(r, "k5 + k7"));
  auto b = RatFun(parse_poly(r, "k5"), parse_poly(r, "k5 + k7"));
  CHECK((a * RatFun(parse_poly(r, "k5")) == b));
  CHECK((a + b).str() == "(k5 + 1)/(k5 + k7)");
  CHECK((b - b).is_zero());
  CHECK((b / b).is_one());
  auto s = make_ring({"a", "b", "d"});
  CHECK(RatFun(parse_poly(s, "a + b*d")).str() == "b*d + a");
  CHECK(RatFun(parse_poly(s, "2*a"), parse_poly(s, "4*b")).str() == "a/(2*b)");
}
