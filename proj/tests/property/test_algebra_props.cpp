#include "doctest.h"
#include "suites.hpp"

using namespace sia::testing;

namespace {

void report(const SuiteResult& r) {
  MESSAGE(r.summary());
  for (const auto& f : r.failures) FAIL_CHECK(f);
}

}  // namespace

TEST_CASE("Groebner membership agrees with the Macaulay oracle") {
  auto r = groebner_membership_suite();
  report(r);
  CHECK(r.cases >= 200);
}

TEST_CASE("reduced bases do not depend on generator order") {
  auto r = basis_uniqueness_suite();
  report(r);
  CHECK(r.cases == 100);
}

TEST_CASE("solution counts match exhaustive enumeration over GF(p)") {
  auto r = solution_count_suite();
  report(r);
  CHECK(r.cases == 100);
}

TEST_CASE("the oracle itself") {
  auto R = sia::algebra::make_ring({"a", "b"});
  const std::uint32_t p = 101;
  std::mt19937_64 rng(1);
  auto g = random_poly(R, rng, p, 2, 2);
  Macaulay m({g}, 5, p);
  CHECK(*m.contains(g * g));
  CHECK_FALSE(m.contains(g * g * g * g * g * g).has_value());
  auto x = sia::algebra::ZpPoly::variable(R, 0, sia::algebra::Zp(1, p));
  CHECK(count_zeros({x * x - x}, p) == 2 * p);
}
