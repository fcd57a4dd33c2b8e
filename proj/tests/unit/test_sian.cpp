#include "doctest.h"
#include "sia/algebra/parse.hpp"
#include "sia/model/examples.hpp"
#include "sia/sian/sian.hpp"

using namespace sia;
using namespace sia::sian;
using algebra::parse_poly;
using algebra::Zp;

namespace {

using V = std::vector<std::string>;

V sorted(V v) {
  std::sort(v.begin(), v.end());
  return v;
}

algebra::GroebnerBasis<algebra::Rational> basis_of(const ProlongedSystem& s) {
  return algebra::groebner(s.ring, s.all());
}

bool has_equation(const ProlongedSystem& s, const QPoly& p) {
  for (const auto& e : s.equations)
    if (e == p || e == -p) return true;
  return false;
}

}  // namespace

TEST_CASE("prolongation of x' = a*x, y = x") {
  auto m = model::parse_model("diff(x(t), t) = a*x(t); y(t) = x(t)");
  auto s = prolong(m, {1});
  CHECK(s.saturation.is_zero());
  auto gb = basis_of(s);
  CHECK(algebra::ideal_contains(gb, parse_poly(s.ring, "y_0 - x_0")));
  CHECK(algebra::ideal_contains(gb, parse_poly(s.ring, "y_1 - a*x_0")));
  CHECK_FALSE(algebra::ideal_contains(gb, parse_poly(s.ring, "y_1 - x_0")));
  CHECK(s.labels == V{"y^(0)", "y^(1)", "x^(1)"});
}

TEST_CASE("prolongation clears rational right-hand sides") {
  auto m = model::parse_model("diff(x(t), t) = 1/x(t); y(t) = x(t)");
  auto s = prolong(m, {1});
  CHECK(has_equation(s, parse_poly(s.ring, "x_0*x_1 - 1")));
  CHECK(s.saturation == parse_poly(s.ring, "z*x_0 - 1"));
}

TEST_CASE("Lotka-Volterra second jet carries the mixed term") {
  auto m = model::parse_model(model::find_example("lotka-volterra")->text);
  auto s = prolong(m, {2});
  // D(a*x1 - b*x1*x2) by the product rule
  CHECK(has_equation(s, parse_poly(s.ring, "x1_2 - a*x1_1 + b*x1_1*x2_0 + b*x1_0*x2_1")));
  auto gb = basis_of(s);
  CHECK(algebra::ideal_contains(
      gb, parse_poly(s.ring, "y_2 - a*(a*x1_0 - b*x1_0*x2_0) + b*(a*x1_0 - b*x1_0*x2_0)*x2_0 + b*x1_0*(-c*x2_0 + d*x1_0*x2_0)")));
}

TEST_CASE("sampled points satisfy the prolonged system") {
  for (const char* text : {"diff(x1(t), t) = a*x1(t) - b*x1(t)*x2(t); diff(x2(t), t) = -c*x2(t) + d*x1(t)*x2(t); y(t) = x1(t)",
                           "diff(x(t), t) = a*x(t)/(1 + x(t)) + u(t); y(t) = x(t)^2 + b"}) {
    auto m = model::parse_model(text);
    auto s = prolong(m, std::vector<unsigned>(m.outputs.size(), 4));
    std::mt19937_64 rng(7);
    auto pt = sample_point(s, m, 1000, algebra::kPrimes[0], rng);
    std::vector<Zp> vals;
    for (const auto& v : pt.values) vals.push_back(v.value_or(Zp(0, pt.prime)));
    for (const auto& e : s.all()) CHECK(algebra::evaluate(algebra::reduce_mod(e, pt.prime), vals, Zp(0, pt.prime)).is_zero());
  }
}

TEST_CASE("vanishing denominators are resampled") {
  auto m = model::parse_model("diff(x(t), t) = x(t)/(a - 1); y(t) = x(t)");
  auto s = prolong(m, {1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    auto pt = sample_point(s, m, 2, algebra::kPrimes[1], rng);
    CHECK(pt.values[s.mu(0)]->value() == 2);
  }
}

TEST_CASE("sampling range grows with the probability") {
  auto lo = sampling_range(parse_probability("0.9"), 100);
  auto mid = sampling_range(parse_probability("0.99"), 100);
  auto hi = sampling_range(parse_probability("0.999"), 100);
  CHECK(lo < mid);
  CHECK(mid < hi);
  CHECK(mid == 20000);
  CHECK_THROWS(parse_probability("1"));
  CHECK_THROWS(parse_probability("0"));
}

TEST_CASE("default truncation orders") {
  auto comp = model::parse_model(model::find_example("competition")->text);
  CHECK(default_orders(comp) == std::vector<unsigned>{6, 6});
  auto one = model::parse_model("diff(x(t), t) = a*x(t); y(t) = x(t)");
  CHECK(default_orders(one) == std::vector<unsigned>{2});
}

TEST_CASE("replicate") {
  auto m = model::parse_model("dx/dt = a*x + u(t); y = x");
  CHECK(replicate(m, 1) == m);
  auto r = replicate(m, 2);
  CHECK(r.states == V{"x_1", "x_2"});
  CHECK(r.inputs == V{"u_1", "u_2"});
  CHECK(r.params == V{"a"});
  CHECK(model::render(r, r.odes[1], model::Syntax::SlashD) == "x_2*a + u_2(t)");
}

TEST_CASE("symmetric parameters are not identifiable") {
  auto m = model::parse_model("diff(x(t), t) = (a + b)*x(t); y(t) = x(t)");
  AnalysisOptions opt;
  auto r = assess_full(m, opt, 1, {{"a+b", RatFun(parse_poly(m.ring, "a + b"))}});
  CHECK(sorted(r.report.non_identifiable) == V{"a", "b"});
  CHECK(r.report.globally == V{"x(0)"});
  REQUIRE(r.functions.size() == 1);
  CHECK(r.functions[0].verdict == Verdict::Global);
}

TEST_CASE("local identifiability with two values") {
  // y = x with x' = a^2*x: a is recovered up to sign
  auto m = model::parse_model("diff(x(t), t) = a^2*x(t); y(t) = x(t)");
  auto r = assess(m, {}, 3);
  CHECK(r.locally_not_globally == V{"a"});
  CHECK(r.num_solutions.at("a") == 2);
  CHECK(r.globally == V{"x(0)"});
}

TEST_CASE("a report is a partition and is reproducible") {
  auto m = model::parse_model(model::find_example("slow-fast")->text);
  auto a = assess(m, {}, 11), b = assess(m, {}, 11);
  CHECK(a.globally == b.globally);
  CHECK(a.locally_not_globally == b.locally_not_globally);
  CHECK(a.num_solutions == b.num_solutions);
  std::size_t total = a.globally.size() + a.locally_not_globally.size() + a.non_identifiable.size() + a.undetermined.size();
  CHECK(total == m.params.size() + m.states.size());
  CHECK(a.undetermined.empty());
}

TEST_CASE("copies omit initial conditions") {
  auto m = model::parse_model(model::find_example("slow-fast")->text);
  AnalysisOptions opt;
  opt.copies = 2;
  auto r = assess(m, opt, 5);
  CHECK(sorted(r.globally) == V{"eB", "k1", "k2"});
  CHECK(r.non_identifiable.empty());
  CHECK(r.locally_not_globally.empty());
}

TEST_CASE("step budget surfaces as undetermined") {
  auto m = model::parse_model(model::find_example("crn")->text);
  AnalysisOptions opt;
  opt.groebner.max_steps = 50;
  auto r = assess(m, opt, 1);
  CHECK(r.undetermined.size() == 12);
  CHECK_FALSE(r.warnings.empty());
}
