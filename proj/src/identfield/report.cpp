#include <algorithm>
#include <numeric>
#include <random>

#include "internal.hpp"
#include "sia/algebra/groebner.hpp"
#include "sia/identfield/identfield.hpp"

namespace sia::identfield {

namespace {

std::vector<RatFun> coefficients_of(const IOEquationSet& io) {
  std::vector<RatFun> out;
  for (const auto& e : io.equations)
    for (std::size_t i = 0; i < e.eq.size(); ++i)
      if (!e.eq.coeff(i).is_constant()) out.push_back(e.eq.coeff(i));
  return out;
}

std::vector<RatFun> on_model(const ModelSystem& m, const std::vector<RatFun>& fs) {
  std::vector<RatFun> out;
  for (const auto& f : fs) out.push_back(to_model(m, f));
  return out;
}

std::vector<std::size_t> rotated(std::size_t n, std::size_t r) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = (i + r) % n;
  return v;
}

// Alternatives tried by refinement, in order.
std::vector<Ranking> alternative_rankings(std::size_t ny, unsigned attempts, std::uint64_t seed) {
  std::vector<Ranking> out;
  auto seen = [&](const Ranking& r) {
    for (const auto& o : out)
      if (o.kind == r.kind && o.outputs == r.outputs) return true;
    return r.kind == RankingKind::Orderly && r.outputs == rotated(ny, 0);
  };
  auto push = [&](Ranking r) {
    if (out.size() < attempts && !seen(r)) out.push_back(std::move(r));
  };
  push({RankingKind::Elimination, rotated(ny, 0)});
  for (std::size_t r = 1; r < ny; ++r) {
    push({RankingKind::Orderly, rotated(ny, r)});
    push({RankingKind::Elimination, rotated(ny, r)});
  }
  std::mt19937_64 rng(seed);
  // bounded: small output counts have few distinct rankings
  for (unsigned tries = 0; out.size() < attempts && tries < 16 * attempts; ++tries) {
    Ranking r{tries % 2 ? RankingKind::Orderly : RankingKind::Elimination, rotated(ny, 0)};
    std::shuffle(r.outputs.begin(), r.outputs.end(), rng);
    push(std::move(r));
  }
  return out;
}

}  // namespace

CoefficientField coefficient_field(const IOEquationSet& io, const ModelSystem& m, const algebra::GroebnerOptions& opt,
                                   std::uint64_t seed) {
  if (io.equations.empty()) throw std::invalid_argument("empty input-output set");
  CoefficientField cf;
  cf.coefficients = coefficients_of(io);
  cf.generators = simplify_generators(cf.coefficients, seed, opt);
  cf.beta = experiment_bound(m, io.ranking, opt, seed);
  return cf;
}

std::vector<RatFun> single_experiment_filter(const std::vector<RatFun>& generators, const ModelSystem& m,
                                             const sian::AnalysisOptions& opt, std::uint64_t seed,
                                             const std::vector<RatFun>& extra, const algebra::Interrupt* interrupt) {
  std::vector<RatFun> pool;
  auto add = [&](const RatFun& f) {
    if (f.is_constant()) return;
    for (const auto& g : pool)
      if (g == f) return;
    pool.push_back(f);
  };
  for (const auto& g : generators) add(g);
  for (const auto& g : extra) add(g);
  std::vector<sian::FunctionQuery> queries;
  for (std::size_t i = 0; i < pool.size(); ++i) queries.push_back({"g" + std::to_string(i + 1), pool[i]});
  sian::AnalysisOptions one = opt;
  one.query_initial_conditions = false;
  auto r = sian::assess_full(m, one, seed, queries, interrupt);
  RingPtr P = parameter_ring(m);
  std::vector<RatFun> single;
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (r.functions[i].verdict == sian::Verdict::Global) single.push_back(to_params(m, P, pool[i]));
  return on_model(m, simplify_generators(single, seed, opt.groebner));
}

std::vector<RatFun> initial_value_generators(const ModelSystem& m, const std::vector<RatFun>& single) {
  std::vector<RatFun> out = single;
  auto has_input = [&](const RatFun& h) {
    auto a = h.num().support_vars(), b = h.den().support_vars();
    for (std::size_t l = 0; l < m.inputs.size(); ++l)
      if (a[m.input_var(l)] || b[m.input_var(l)]) return true;
    return false;
  };
  for (const auto& g : m.obs) {
    RatFun h = g;
    for (std::size_t j = 0; j <= m.states.size() && !has_input(h); ++j) {
      if (!h.is_constant()) out.push_back(h);
      RatFun d = h.zero_like();
      for (std::size_t i = 0; i < m.states.size(); ++i) d += h.derivative(m.state_var(i)) * m.odes[i];
      h = d;
    }
  }
  return out;
}

unsigned refine_bound(const ModelSystem& m, unsigned attempts, std::uint64_t seed, const algebra::GroebnerOptions& opt) {
  unsigned beta = experiment_bound(m, {}, opt, seed);
  for (const auto& r : alternative_rankings(m.outputs.size(), attempts, seed)) {
    if (beta == 1) break;
    try {
      beta = std::min(beta, experiment_bound(m, r, opt, seed));
    } catch (const algebra::ResourceLimit&) {
      // this ranking is too expensive; keep the others
    }
  }
  return beta;
}

std::optional<FieldReport> bypass(const sian::IdentReport& report, const ModelSystem& m) {
  for (const auto& p : m.params)
    if (report.verdict(p) != sian::Verdict::Global) return std::nullopt;
  FieldReport f;
  for (std::size_t q = 0; q < m.params.size(); ++q) f.multi_experiment.push_back(RatFun::variable(m.ring, m.param_var(q)));
  f.single_experiment = f.multi_experiment;
  f.beta = 1;
  f.bypassed = true;
  return f;
}

FieldReport identifiable_functions(const ModelSystem& m, const sian::AnalysisOptions& opt, const FieldOptions& fopt,
                                   std::uint64_t seed, const sian::IdentReport* report,
                                   const algebra::Interrupt* interrupt) {
  if (fopt.attempt_bypass) {
    sian::IdentReport own;
    if (!report) {
      sian::AnalysisOptions one = opt;
      one.query_initial_conditions = false;
      own = sian::assess(m, one, seed, interrupt);
      report = &own;
    }
    if (auto b = bypass(*report, m)) return *b;
  }
  algebra::GroebnerOptions gopt = fopt.groebner;
  gopt.interrupt = interrupt ? interrupt : opt.groebner.interrupt;

  FieldReport out;
  // the GF(p) bound first: it fails fast where the exact elimination would not
  out.beta = experiment_bound(m, {}, gopt, seed);
  auto io = io_equations(m, {}, gopt, seed);
  CoefficientField cf;
  cf.coefficients = coefficients_of(io);
  cf.generators = simplify_generators(cf.coefficients, seed, gopt);
  if (fopt.refine) out.beta = std::min(out.beta, refine_bound(m, fopt.attempts, seed, gopt));

  RingPtr P = parameter_ring(m);
  auto multi = cf.generators;
  auto single = single_experiment_filter(on_model(m, multi), m, opt, seed, {}, interrupt);
  auto in_params = [&](const std::vector<RatFun>& fs) {
    std::vector<RatFun> r;
    for (const auto& f : fs) r.push_back(to_params(m, P, f));
    return r;
  };
  if (!fields_equal(in_params(single), multi, seed, gopt)) {
    // coefficients of the relations for other rankings; the ones with a
    // single output at the bottom carry its own relation
    std::vector<RatFun> extra = cf.coefficients;
    for (std::size_t r = 0; r < m.outputs.size(); ++r) {
      try {
        auto alt = io_equations(m, {RankingKind::Elimination, rotated(m.outputs.size(), r)}, gopt, seed);
        auto c = coefficients_of(alt);
        extra.insert(extra.end(), c.begin(), c.end());
      } catch (const algebra::ResourceLimit&) {
        out.warnings.push_back("skipped an alternative ranking for the single-experiment search: resource limit");
      }
    }
    for (const auto& g : simplify_generators(extra, seed, gopt)) extra.push_back(g);
    single = single_experiment_filter(on_model(m, multi), m, opt, seed, on_model(m, extra), interrupt);
  }
  out.multi_experiment = on_model(m, multi);
  out.single_experiment = single;
  out.relation_beta = out.beta;
  if (fields_equal(in_params(single), multi, seed, gopt)) out.beta = 1;
  return out;
}

}  // namespace sia::identfield
