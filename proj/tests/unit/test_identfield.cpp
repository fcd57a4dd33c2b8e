#include <random>

#include "doctest.h"
#include "sia/algebra/parse.hpp"
#include "sia/identfield/identfield.hpp"
#include "sia/model/examples.hpp"

using namespace sia;
using namespace sia::identfield;
using algebra::QPoly;
using algebra::Rational;

namespace {

ModelSystem example(const std::string& name) { return model::parse_model(model::find_example(name)->text); }

// "a/b" style text in the variables of ring
RatFun fn(const RingPtr& ring, const std::string& num, const std::string& den = "1") {
  return RatFun(algebra::parse_poly(ring, num), algebra::parse_poly(ring, den));
}

std::vector<RatFun> fns(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<RatFun> out;
  for (const auto& t : texts) out.push_back(fn(ring, t));
  return out;
}

Rational eval(const RatFun& f, const std::vector<Rational>& pt) {
  return algebra::evaluate(f.num(), pt, Rational(0)) / algebra::evaluate(f.den(), pt, Rational(0));
}

// Oracle: y_k^(j)(0) = L^j g_k at a rational point of the model ring, by
// symbolic Lie derivatives. Input-free models only.
std::vector<std::vector<Rational>> output_jets(const ModelSystem& m, const std::vector<Rational>& pt, std::size_t J) {
  std::vector<std::vector<Rational>> out;
  for (const auto& g : m.obs) {
    std::vector<Rational> row;
    RatFun h = g;
    for (std::size_t j = 0; j <= J; ++j) {
      row.push_back(eval(h, pt));
      RatFun d = h.zero_like();
      for (std::size_t i = 0; i < m.states.size(); ++i) d += h.derivative(m.state_var(i)) * m.odes[i];
      h = d;
    }
    out.push_back(row);
  }
  return out;
}

// Every relation vanishes on the exact jets of random trajectories.
bool vanishes_on_trajectories(const ModelSystem& m, const IOEquationSet& io, int trials = 3) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(2, 40);
  for (int t = 0; t < trials; ++t) {
    std::vector<Rational> pt(m.ring->nvars(), Rational(0));
    for (std::size_t i = 0; i < m.states.size(); ++i) pt[m.state_var(i)] = Rational(d(rng), d(rng));
    std::vector<Rational> mu;
    for (std::size_t q = 0; q < m.params.size(); ++q) {
      pt[m.param_var(q)] = Rational(d(rng), d(rng));
      mu.push_back(pt[m.param_var(q)]);
    }
    auto jets = output_jets(m, pt, io.jet_order);
    std::vector<Rational> at(io.ring->nvars(), Rational(0));
    for (std::size_t k = 0; k < io.noutputs; ++k)
      for (std::size_t j = 0; j <= io.jet_order; ++j) at[io.y(k, j)] = jets[k][j];
    for (const auto& e : io.equations) {
      Rational acc(0);
      for (std::size_t i = 0; i < e.eq.size(); ++i) {
        Rational mono(1);
        for (std::size_t v = 0; v < io.ring->nvars(); ++v)
          for (unsigned k = 0; k < e.eq.exp(i, v); ++k) mono *= at[v];
        acc += eval(e.eq.coeff(i), mu) * mono;
      }
      if (!(acc == Rational(0))) return false;
    }
  }
  return true;
}

bool same_field(const std::vector<RatFun>& a, const std::vector<RatFun>& b) {
  for (const auto& f : a)
    if (!field_membership_exact(f, b)) return false;
  for (const auto& f : b)
    if (!field_membership_exact(f, a)) return false;
  return true;
}

// both field lists brought to the parameter ring of m
std::vector<RatFun> params_of(const ModelSystem& m, const std::vector<RatFun>& fs) {
  auto P = parameter_ring(m);
  std::vector<RatFun> out;
  for (const auto& f : fs) out.push_back(to_params(m, P, f));
  return out;
}

}  // namespace

TEST_CASE("exponential decay has the relation y' - a*y") {
  auto m = model::parse_model("diff(x(t), t) = a*x(t); y(t) = x(t)");
  auto io = io_equations(m);
  REQUIRE(io.equations.size() == 1);
  const auto& e = io.equations[0].eq;
  CHECK(io.equations[0].order == 1);
  CHECK(e.size() == 2);
  CHECK(vanishes_on_trajectories(m, io));
  auto P = io.params;
  auto cf = coefficient_field(io, m);
  REQUIRE(cf.generators.size() == 1);
  CHECK(cf.generators[0] == fn(P, "a"));
  CHECK(cf.beta == 1);
}

TEST_CASE("input-output relations vanish along trajectories") {
  for (auto name : {"lotka-volterra", "tumor", "slow-fast", "competition"}) {
    CAPTURE(name);
    auto m = example(name);
    auto io = io_equations(m);
    CHECK(io.equations.size() == m.outputs.size());
    CHECK(vanishes_on_trajectories(m, io));
    for (const auto& e : io.equations) CHECK(e.eq.coeff(0).is_one());
  }
}

TEST_CASE("alternative rankings give valid relations") {
  auto m = example("slow-fast");
  for (auto kind : {RankingKind::Orderly, RankingKind::Elimination}) {
    auto io = io_equations(m, {kind, {3, 2, 1, 0}});
    CHECK(vanishes_on_trajectories(m, io));
  }
  CHECK_THROWS_AS(io_equations(m, {RankingKind::Orderly, {0, 0, 1, 2}}), std::invalid_argument);
}

TEST_CASE("Lotka-Volterra relation needs six terms over Q(a, c, d)") {
  auto m = example("lotka-volterra");
  auto io = io_equations(m);
  REQUIRE(io.equations.size() == 1);
  CHECK(io.equations[0].eq.size() == 6);
  auto cf = coefficient_field(io, m);
  CHECK(same_field(cf.generators, fns(io.params, {"a", "c", "d"})));
  CHECK(cf.beta == 1);
}

TEST_CASE("membership examples") {
  auto R = algebra::make_ring({"k1", "k2", "a", "b", "d"});
  auto sym = fns(R, {"k1*k2", "k1 + k2"});
  CHECK_FALSE(field_membership(fn(R, "k1"), sym));
  CHECK_FALSE(field_membership_exact(fn(R, "k1"), sym));
  CHECK(field_membership(fn(R, "k1^2 + k2^2"), sym));
  CHECK(field_membership_exact(fn(R, "k1^2 + k2^2"), sym));
  CHECK(field_membership(fn(R, "1", "k1 + k2"), sym));
  CHECK(field_membership(fn(R, "k1 - k2", "1")*fn(R, "k1 - k2"), sym));
  CHECK_FALSE(field_membership(fn(R, "k1 - k2"), sym));
  auto lin = fns(R, {"a + b*d"});
  CHECK(field_membership(fn(R, "2*a + 2*b*d + 3"), lin));
  CHECK_FALSE(field_membership(fn(R, "a"), lin));
  CHECK(field_membership(fn(R, "7"), {}));
  CHECK_FALSE(field_membership(fn(R, "a"), {}));
}

TEST_CASE("randomized and exact membership agree") {
  auto R = algebra::make_ring({"p", "q", "r"});
  auto gens = fns(R, {"p + q", "p*q*r", "r^2"});
  for (auto c : {"p", "q", "r", "p^2 + q^2", "p*q", "r*(p + q)", "p*q*r^3 + 1", "p - q", "(p + q)^3 - r^2"}) {
    CAPTURE(c);
    CHECK(field_membership(fn(R, c), gens) == field_membership_exact(fn(R, c), gens));
  }
}

TEST_CASE("membership is reflexive and monotone") {
  auto R = algebra::make_ring({"p", "q", "r"});
  auto gens = fns(R, {"p*q", "q + r"});
  for (const auto& g : gens) CHECK(field_membership(g, gens));
  auto bigger = gens;
  bigger.push_back(fn(R, "p"));
  for (auto c : {"p*q + q + r", "(q + r)^2*p*q", "p^2*q^2"}) {
    CAPTURE(c);
    CHECK(field_membership(fn(R, c), gens));
    CHECK(field_membership(fn(R, c), bigger));
  }
  CHECK(field_membership(fn(R, "q"), bigger));
  CHECK_FALSE(field_membership(fn(R, "q"), gens));
}

TEST_CASE("generator simplification keeps the field") {
  auto R = algebra::make_ring({"k1", "k2", "k3", "k5", "k7"});
  auto s = simplify_generators(fns(R, {"k1 + k2", "k1*k2", "k1^2 + k2^2"}));
  CHECK(s.size() == 2);
  CHECK(same_field(s, fns(R, {"k1 + k2", "k1*k2"})));
  auto t = simplify_generators({fn(R, "k5*k7", "k7^2"), fn(R, "k3 + k7"), fn(R, "k3*k7 + 2")});
  CHECK(t.size() == 3);
  CHECK(same_field(t, {fn(R, "k5", "k7"), fn(R, "k3 + k7"), fn(R, "k3*k7")}));
  CHECK_FALSE(field_membership(fn(R, "k3"), t));
  auto u = simplify_generators(fns(R, {"k1 + k2", "2*k1 + 2*k2 + 5"}));
  REQUIRE(u.size() == 1);
  CHECK(u[0] == fn(R, "k1 + k2"));
}

TEST_CASE("symmetric sum is the only combination") {
  auto m = model::parse_model("diff(x(t), t) = (a + b)*x(t); y(t) = x(t)");
  auto f = identifiable_functions(m, {}, {}, 1);
  CHECK_FALSE(f.bypassed);
  auto P = parameter_ring(m);
  CHECK(same_field(params_of(m, f.multi_experiment), fns(P, {"a + b"})));
  CHECK(same_field(params_of(m, f.single_experiment), fns(P, {"a + b"})));
  CHECK(f.beta == 1);
}

TEST_CASE("tumor combinations") {
  auto m = example("tumor");
  FieldOptions fo;
  fo.attempt_bypass = false;
  auto f = identifiable_functions(m, {}, fo, 1);
  auto P = parameter_ring(m);
  auto expect = std::vector<RatFun>{fn(P, "k3"), fn(P, "k4"), fn(P, "k6"), fn(P, "k7"), fn(P, "k5", "k7"),
                                    fn(P, "a + b*d")};
  CHECK(same_field(params_of(m, f.multi_experiment), expect));
  CHECK(same_field(params_of(m, f.single_experiment), expect));
  CHECK(f.beta == 1);
}

TEST_CASE("Lotka-Volterra combinations and b*x2(0)") {
  auto m = example("lotka-volterra");
  auto f = identifiable_functions(m, {}, {}, 1);
  auto P = parameter_ring(m);
  CHECK(same_field(params_of(m, f.single_experiment), fns(P, {"a", "c", "d"})));
  CHECK(same_field(params_of(m, f.multi_experiment), fns(P, {"a", "c", "d"})));
  CHECK(f.beta == 1);
  auto ext = initial_value_generators(m, f.single_experiment);
  CHECK(field_membership(fn(m.ring, "b*x2"), ext));
  CHECK(field_membership(fn(m.ring, "x1"), ext));
  CHECK_FALSE(field_membership(fn(m.ring, "b"), ext));
  CHECK_FALSE(field_membership(fn(m.ring, "x2"), ext));
}

TEST_CASE("slow-fast combinations and bound") {
  auto m = example("slow-fast");
  auto f = identifiable_functions(m, {}, {}, 1);
  auto P = parameter_ring(m);
  CHECK(same_field(params_of(m, f.multi_experiment), fns(P, {"eB", "k1", "k2"})));
  CHECK(same_field(params_of(m, f.single_experiment), fns(P, {"k1*k2", "k1 + k2"})));
  CHECK(f.beta == 3);
  FieldOptions fo;
  fo.refine = true;
  CHECK(identifiable_functions(m, {}, fo, 1).beta == 2);
  CHECK(refine_bound(m, 4, 1) == 2);
  CHECK(refine_bound(m, 0, 1) == 3);
}

TEST_CASE("two copies make the slow-fast field single-experiment") {
  auto m = example("slow-fast");
  sian::AnalysisOptions o;
  o.copies = 2;
  FieldOptions fo;
  fo.attempt_bypass = false;
  auto f = identifiable_functions(m, o, fo, 1);
  auto P = parameter_ring(m);
  CHECK(same_field(params_of(m, f.single_experiment), fns(P, {"eB", "k1", "k2"})));
  CHECK(f.relation_beta == 3);
  CHECK(f.beta == 1);
  fo.attempt_bypass = true;
  CHECK(identifiable_functions(m, o, fo, 1).bypassed);
}

TEST_CASE("bypass reports the parameters themselves") {
  auto m = example("competition");
  sian::AnalysisOptions o;
  auto r = sian::assess(m, o, 1);
  auto b = bypass(r, m);
  REQUIRE(b);
  CHECK(b->bypassed);
  CHECK(b->beta == 1);
  CHECK(b->multi_experiment.size() == m.params.size());
  auto lv = example("lotka-volterra");
  CHECK_FALSE(bypass(sian::assess(lv, o, 1), lv));
}

TEST_CASE("CRN long path generates Q(k1..k6)") {
  auto m = example("crn");
  FieldOptions fo;
  fo.attempt_bypass = false;
  auto f = identifiable_functions(m, {}, fo, 1);
  CHECK_FALSE(f.bypassed);
  auto P = parameter_ring(m);
  auto ks = fns(P, {"k1", "k2", "k3", "k4", "k5", "k6"});
  CHECK(fields_equal(params_of(m, f.multi_experiment), ks));
  CHECK(fields_equal(params_of(m, f.single_experiment), ks));
  CHECK(f.beta == 1);
}
