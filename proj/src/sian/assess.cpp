#include <algorithm>
#include <cmath>
#include <set>

#include "series.hpp"
#include "sia/sian/sian.hpp"

namespace sia::sian {

using algebra::Exponent;
using algebra::Zp;
using algebra::ZpPoly;
using detail::DualSeries;
using detail::Echelon;

Rational parse_probability(const std::string& text) {
  Rational p;
  try {
    p = Rational::parse(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("probability must be a decimal or rational number, got '" + text + "'");
  }
  if (p.sign() <= 0 || !(p < Rational(1))) throw std::invalid_argument("probability must lie strictly between 0 and 1");
  return p;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Global: return "global";
    case Verdict::Local: return "local";
    case Verdict::NonIdentifiable: return "non-identifiable";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

Verdict IdentReport::verdict(const std::string& symbol) const {
  auto in = [&](const std::vector<std::string>& v) { return std::find(v.begin(), v.end(), symbol) != v.end(); };
  if (in(globally)) return Verdict::Global;
  if (in(locally_not_globally)) return Verdict::Local;
  if (in(non_identifiable)) return Verdict::NonIdentifiable;
  return Verdict::Undetermined;
}

std::uint64_t sampling_range(const Rational& probability, std::uint64_t degree_bound) {
  // Schwartz-Zippel: a nonzero polynomial of degree D vanishes at a uniform
  // point of [1, R]^N with probability at most D/R. Half of 1 - p goes here.
  Rational eps = (Rational(1) - probability) / Rational(2);
  mpz_class D = std::max<std::uint64_t>(degree_bound, 1);
  mpq_class r = mpq_class(D) / eps.value();
  mpz_class R = r.get_num() / r.get_den();
  if (R * r.get_den() != r.get_num()) R += 1;
  const mpz_class cap = mpz_class(1) << 30;
  if (R > cap) R = cap;
  if (R < 2) R = 2;
  return R.get_ui();
}

namespace {

constexpr int kMaxDraws = 64;
constexpr std::size_t kSubstitutionTerms = 1;

std::vector<std::uint64_t> unit(std::size_t n, std::size_t l) {
  std::vector<std::uint64_t> e(n, 0);
  e[l] = 1;
  return e;
}

unsigned max_degree(const ModelSystem& m) {
  unsigned d = 1;
  for (const auto* list : {&m.odes, &m.obs})
    for (const auto& f : *list) d = std::max({d, f.num().total_degree(), f.den().total_degree()});
  return d;
}

/// One random trajectory: values of the unknowns theta = (params, x(0)),
/// input jets, and the dual power-series solution seeded in theta.
struct Trajectory {
  std::vector<std::uint64_t> theta;
  std::vector<std::vector<std::uint64_t>> ujets;
  detail::SeriesSolution sol;
  std::vector<std::uint64_t> factorial;

  std::uint64_t state_jet(std::size_t i, std::size_t j, std::uint32_t p) const {
    return sol.states[i].at(j, 0) * factorial[j] % p;
  }
  std::uint64_t output_jet(std::size_t k, std::size_t j, std::uint32_t p) const {
    return sol.outputs[k].at(j, 0) * factorial[j] % p;
  }
  std::vector<std::uint64_t> output_row(std::size_t k, std::size_t j) const {
    const auto& s = sol.outputs[k];
    std::vector<std::uint64_t> r(s.width() - 1);
    for (std::size_t d = 1; d < s.width(); ++d) r[d - 1] = s.at(j, d);
    return r;
  }
};

struct ModModel {
  std::vector<ZpPoly> fnum, fden, gnum, gden;
};

ModModel reduce_model(const ModelSystem& m, std::uint32_t p) {
  ModModel mm;
  for (const auto& f : m.odes) {
    mm.fnum.push_back(algebra::reduce_mod(f.num(), p));
    mm.fden.push_back(algebra::reduce_mod(f.den(), p));
  }
  for (const auto& g : m.obs) {
    mm.gnum.push_back(algebra::reduce_mod(g.num(), p));
    mm.gden.push_back(algebra::reduce_mod(g.den(), p));
  }
  return mm;
}

Trajectory simulate(const ModelSystem& m, const ModModel& mm, std::vector<std::uint64_t> theta,
                    std::vector<std::vector<std::uint64_t>> ujets, std::size_t len, bool seeded, std::uint32_t p) {
  const std::size_t n = m.states.size(), lam = m.params.size();
  const std::size_t width = seeded ? 1 + lam + n : 1;
  Trajectory t;
  t.factorial.assign(len + 1, 1);
  for (std::size_t j = 1; j <= len; ++j) t.factorial[j] = t.factorial[j - 1] * j % p;
  std::vector<DualSeries> vars(m.ring->nvars(), DualSeries(len, width, p));
  for (std::size_t q = 0; q < lam; ++q) {
    auto& s = vars[m.param_var(q)];
    s.at(0, 0) = theta[q];
    if (seeded) s.at(0, 1 + q) = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& s = vars[m.state_var(i)];
    s.at(0, 0) = theta[lam + i];
    if (seeded) s.at(0, 1 + lam + i) = 1;
  }
  for (std::size_t l = 0; l < m.inputs.size(); ++l) {
    auto& s = vars[m.input_var(l)];
    for (std::size_t j = 0; j < len; ++j) s.at(j, 0) = ujets[l][j] * detail::inv_mod(t.factorial[j], p) % p;
  }
  t.sol = detail::solve_series(mm.fnum, mm.fden, mm.gnum, mm.gden, std::move(vars), n, len, width, p);
  t.theta = std::move(theta);
  t.ujets = std::move(ujets);
  return t;
}

Trajectory draw(const ModelSystem& m, const ModModel& mm, std::size_t len, bool seeded, std::uint64_t range,
                std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, range);
  const std::size_t N = m.params.size() + m.states.size();
  for (int attempt = 0; attempt < kMaxDraws; ++attempt) {
    std::vector<std::uint64_t> theta(N);
    for (auto& v : theta) v = dist(rng) % p;
    std::vector<std::vector<std::uint64_t>> uj(m.inputs.size(), std::vector<std::uint64_t>(len));
    for (auto& row : uj)
      for (auto& v : row) v = dist(rng) % p;
    Trajectory t = simulate(m, mm, std::move(theta), std::move(uj), len, seeded, p);
    if (!t.sol.degenerate) return t;
  }
  throw DegeneratePoint();
}

/// Value and gradient (in theta) of a parameter function at the trajectory.
struct DualValue {
  std::uint64_t value = 0;
  std::vector<std::uint64_t> grad;
  bool defined = true;
};

DualValue eval_function(const ModelSystem& m, const RatFun& f, const std::vector<std::uint64_t>& theta,
                        std::uint32_t p) {
  const std::size_t n = m.states.size(), lam = m.params.size(), width = 1 + lam + n;
  std::vector<DualSeries> vars(f.ring()->nvars(), DualSeries(1, width, p));
  for (std::size_t q = 0; q < lam; ++q) {
    vars[m.param_var(q)].at(0, 0) = theta[q];
    vars[m.param_var(q)].at(0, 1 + q) = 1;
  }
  std::vector<const DualSeries*> args(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) args[v] = &vars[v];
  DualSeries num = detail::eval_series(algebra::reduce_mod(f.num(), p), args, 1, width, p);
  DualSeries den = detail::eval_series(algebra::reduce_mod(f.den(), p), args, 1, width, p);
  DualValue out;
  if (!den.constant_invertible()) {
    out.defined = false;
    return out;
  }
  DualSeries v = num.mul(den.inverse());
  out.value = v.at(0, 0);
  for (std::size_t d = 1; d < width; ++d) out.grad.push_back(v.at(0, d));
  return out;
}

std::string unique_name(const std::set<std::string>& taken, std::string base) {
  while (taken.count(base)) base += "_";
  return base;
}

/// v := value, with value free of every eliminated variable.
struct Elimination {
  std::size_t var;
  ZpPoly value;
};

/// Removes variables occurring in some equation only as a single linear
/// term c*v with constant c, substituting v := -(e - c*v)/c everywhere.
/// Replacements are limited to `max_terms` terms.
std::vector<Elimination> eliminate_linear(std::vector<ZpPoly>& eqs, std::size_t max_terms) {
  std::vector<Elimination> done;
  for (;;) {
    std::size_t best_e = eqs.size(), best_v = 0, best_size = max_terms + 1;
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      const ZpPoly& f = eqs[e];
      if (f.size() - 1 >= best_size) continue;
      const algebra::Ring& R = *f.ring();
      std::vector<int> hits(R.nvars(), 0);
      std::vector<bool> linear(R.nvars(), false);
      for (std::size_t t = 0; t < f.size(); ++t) {
        unsigned deg = R.total_degree(f.mono(t));
        for (std::size_t v = 0; v < R.nvars(); ++v) {
          if (!f.exp(t, v)) continue;
          ++hits[v];
          if (deg == 1) linear[v] = true;
        }
      }
      for (std::size_t v = 0; v < R.nvars(); ++v) {
        if (hits[v] == 1 && linear[v]) {
          best_e = e;
          best_v = v;
          best_size = f.size() - 1;
          break;
        }
      }
    }
    if (best_e == eqs.size()) break;
    ZpPoly f = std::move(eqs[best_e]);
    eqs.erase(eqs.begin() + static_cast<std::ptrdiff_t>(best_e));
    const algebra::Ring& R = *f.ring();
    Zp c;
    ZpPoly rest(f.ring());
    for (std::size_t t = 0; t < f.size(); ++t) {
      if (f.exp(t, best_v)) c = f.coeff(t);
      else rest.push_back(f.coeff(t), f.mono(t));
    }
    (void)R;
    ZpPoly value = rest.scaled(-c.inv());
    std::vector<ZpPoly> kept;
    for (auto& g : eqs) {
      ZpPoly h = algebra::substitute(g, best_v, value);
      if (h.is_zero()) continue;
      if (h.is_constant()) throw DegeneratePoint();
      kept.push_back(std::move(h));
    }
    eqs = std::move(kept);
    for (auto& d : done) d.value = algebra::substitute(d.value, best_v, value);
    done.push_back({best_v, std::move(value)});
  }
  return done;
}

}  // namespace

SamplePoint sample_point(const ProlongedSystem& sys, const ModelSystem& m, std::uint64_t range,
                         std::uint32_t prime, std::mt19937_64& rng) {
  ModModel mm = reduce_model(m, prime);
  Trajectory t = draw(m, mm, sys.horizon + 1, false, range, prime, rng);
  SamplePoint sp;
  sp.prime = prime;
  sp.values.assign(sys.ring->nvars(), std::nullopt);
  const std::size_t lam = m.params.size();
  for (std::size_t j = 0; j <= sys.horizon; ++j) {
    for (std::size_t i = 0; i < sys.nstates; ++i) sp.values[sys.x(i, j)] = Zp(t.state_jet(i, j, prime), prime);
    for (std::size_t k = 0; k < sys.noutputs; ++k) sp.values[sys.y(k, j)] = Zp(t.output_jet(k, j, prime), prime);
    for (std::size_t l = 0; l < sys.ninputs; ++l) sp.values[sys.u(l, j)] = Zp(t.ujets[l][j], prime);
  }
  for (std::size_t q = 0; q < lam; ++q) sp.values[sys.mu(q)] = Zp(t.theta[q], prime);
  if (!sys.saturation.is_zero()) {
    QPoly Q = (sys.saturation + algebra::q_const(sys.ring, 1)).divide_exact(algebra::q_var(sys.ring, sys.z()));
    std::vector<Zp> pt(sys.ring->nvars(), Zp(0, prime));
    for (std::size_t v = 0; v < pt.size(); ++v)
      if (sp.values[v]) pt[v] = *sp.values[v];
    Zp qv = algebra::evaluate(algebra::reduce_mod(Q, prime), pt, Zp(0, prime));
    if (qv.is_zero()) throw DegeneratePoint();
    sp.values[sys.z()] = qv.inv();
  } else {
    sp.values[sys.z()] = Zp(1, prime);
  }
  return sp;
}

AssessResult assess_full(const ModelSystem& input, const AnalysisOptions& opt, std::uint64_t seed,
                         const std::vector<FunctionQuery>& functions, const algebra::Interrupt* interrupt) {
  Rational prob = parse_probability(opt.probability);
  if (opt.copies == 0) throw std::invalid_argument("copies must be at least 1");
  // With copies, parameters globally identifiable from one copy stay so, and
  // every point of the replicated fibre carries their sampled values. A
  // single-copy pass finds them; the two passes share 1 - p.
  std::vector<bool> pinned(input.params.size(), false);
  if (opt.copies > 1 && opt.check_local_global) {
    prob = Rational(1) - (Rational(1) - prob) / Rational(2);
    AnalysisOptions one = opt;
    one.copies = 1;
    one.query_initial_conditions = false;
    one.probability = prob.str();
    auto single = assess_full(input, one, seed + 0x9e3779b97f4a7c15ULL, {}, interrupt).report;
    for (std::size_t q = 0; q < input.params.size(); ++q) pinned[q] = single.verdict(input.params[q]) == Verdict::Global;
  }
  const ModelSystem m = replicate(input, opt.copies);
  const std::size_t n = m.states.size(), lam = m.params.size(), N = n + lam;
  const bool query_ic = opt.query_initial_conditions && opt.copies == 1;

  AssessResult res;
  IdentReport& rep = res.report;
  rep.probability = opt.probability;
  rep.copies = opt.copies;

  std::mt19937_64 rng(seed);
  const unsigned nu = static_cast<unsigned>(N);
  const std::size_t Lmax = nu + 1;  // stabilization re-check horizon
  const std::uint64_t range = sampling_range(prob, static_cast<std::uint64_t>(N) * (nu + 1) * max_degree(m));

  // functions are given over the input model's ring; move them to the replica ring
  std::vector<RatFun> fq;
  {
    std::vector<std::size_t> map(input.ring->nvars(), m.ring->nvars());
    for (std::size_t q = 0; q < lam; ++q) map[input.param_var(q)] = m.param_var(q);
    for (const auto& f : functions) fq.push_back(f.f.in_ring(m.ring, map));
  }

  std::uint32_t prime = 0;
  ModModel mm;
  for (int tries = 0;; ++tries) {
    prime = algebra::pick_prime(rng);
    try {
      mm = reduce_model(m, prime);
      for (const auto& f : fq) {
        (void)algebra::reduce_mod(f.num(), prime);
        (void)algebra::reduce_mod(f.den(), prime);
      }
      break;
    } catch (const std::domain_error&) {
      if (tries > 16) throw;
    }
  }
  rep.prime = prime;

  // --- Jacobian of output Taylor coefficients with respect to theta ---
  Trajectory traj;
  std::vector<DualValue> fvals;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= kMaxDraws) throw DegeneratePoint();
    traj = draw(m, mm, Lmax + 2, true, range, prime, rng);
    fvals.clear();
    bool ok = true;
    for (const auto& f : fq) {
      fvals.push_back(eval_function(m, f, traj.theta, prime));
      ok = ok && fvals.back().defined;
    }
    if (ok) break;
  }
  if (interrupt) interrupt->poll();

  Echelon jac(N, prime);
  std::vector<unsigned> orders(m.outputs.size(), static_cast<unsigned>(Lmax));
  {
    std::vector<bool> active(m.outputs.size(), true);
    for (std::size_t j = 0; j <= Lmax; ++j) {
      bool any = false;
      for (std::size_t k = 0; k < m.outputs.size(); ++k) {
        if (!active[k]) continue;
        if (!jac.add(traj.output_row(k, j))) {
          orders[k] = static_cast<unsigned>(j);
          active[k] = false;
        } else {
          any = true;
        }
      }
      if (!any && std::none_of(active.begin(), active.end(), [](bool a) { return a; })) break;
    }
  }
  // theta index: params 0..lam-1, then x(0)
  std::vector<bool> local(N);
  {
    Echelon full(N, prime);
    for (std::size_t j = 0; j <= Lmax; ++j)
      for (std::size_t k = 0; k < m.outputs.size(); ++k) full.add(traj.output_row(k, j));
    bool escalate = false;
    for (std::size_t l = 0; l < N; ++l) {
      local[l] = jac.contains(unit(N, l));
      if (full.contains(unit(N, l)) != local[l]) escalate = true;
    }
    if (escalate) {
      rep.warnings.push_back("truncation order raised after the stabilization re-check");
      std::fill(orders.begin(), orders.end(), static_cast<unsigned>(Lmax));
      jac = full;
      for (std::size_t l = 0; l < N; ++l) local[l] = jac.contains(unit(N, l));
    }
  }
  rep.orders = orders;

  // transcendence basis among the non-identifiable coordinates
  std::vector<bool> in_T(N, false);
  {
    Echelon t = jac;
    for (std::size_t l = 0; l < N; ++l)
      if (!local[l] && t.add(unit(N, l))) in_T[l] = true;
  }

  // --- verdict bookkeeping ---
  struct Query {
    std::string name;
    bool local;
    std::ptrdiff_t theta;  // coordinate, or -1 for a function
    std::size_t fn = 0;
    Verdict verdict = Verdict::Undetermined;
    std::size_t count = 0;
  };
  std::vector<Query> queries;
  if (query_ic)
    for (std::size_t i = 0; i < n; ++i)
      queries.push_back({m.init_symbol(i), bool(local[lam + i]), static_cast<std::ptrdiff_t>(lam + i)});
  for (std::size_t q = 0; q < lam; ++q) queries.push_back({m.params[q], bool(local[q]), static_cast<std::ptrdiff_t>(q)});
  for (std::size_t f = 0; f < fq.size(); ++f)
    queries.push_back({functions[f].name, jac.contains(fvals[f].grad), -1, f});
  for (auto& q : queries)
    if (!q.local) q.verdict = Verdict::NonIdentifiable;
  for (auto& q : queries)
    if (q.local && q.theta >= 0 && static_cast<std::size_t>(q.theta) < lam && pinned[q.theta]) {
      q.verdict = Verdict::Global;
      q.count = 1;
    }

  auto open = [](const Query& q) { return q.local && q.verdict == Verdict::Undetermined; };
  bool need_gb = std::any_of(queries.begin(), queries.end(), open);
  if (need_gb && opt.check_local_global) {
    ProlongedSystem sys = prolong(m, orders);
    const RingPtr& R = sys.ring;
    const std::size_t H = sys.horizon;

    // extended ring: jets, parameters, then one tag per function
    std::vector<std::string> names = R->names();
    std::set<std::string> taken(names.begin(), names.end());
    std::vector<std::size_t> tag_var;
    for (std::size_t f = 0; f < fq.size(); ++f) {
      names.push_back(unique_name(taken, "t_" + std::to_string(f + 1)));
      taken.insert(names.back());
      tag_var.push_back(names.size() - 1);
    }
    RingPtr E = algebra::make_ring(names);
    std::vector<std::size_t> id(R->nvars());
    for (std::size_t v = 0; v < id.size(); ++v) id[v] = v;
    std::vector<std::size_t> pmap(m.ring->nvars(), E->nvars());
    for (std::size_t q = 0; q < lam; ++q) pmap[m.param_var(q)] = sys.mu(q);

    std::vector<QPoly> eqs;
    for (const auto& e : sys.equations) eqs.push_back(e.in_ring(E, id));
    QPoly Q = sys.saturation.is_zero()
                  ? algebra::q_const(E, 1)
                  : (sys.saturation + algebra::q_const(R, 1)).divide_exact(algebra::q_var(R, sys.z())).in_ring(E, id);
    for (std::size_t f = 0; f < fq.size(); ++f) {
      QPoly num = fq[f].num().in_ring(E, pmap), den = fq[f].den().in_ring(E, pmap);
      eqs.push_back(den * algebra::q_var(E, tag_var[f]) - num);
      if (!den.is_constant()) Q *= den;
    }
    if (!Q.is_constant()) eqs.push_back(algebra::q_var(E, 0) * Q - algebra::q_const(E, 1));

    // specialize outputs, inputs and the transcendence basis
    std::vector<std::optional<Zp>> known(E->nvars());
    for (std::size_t j = 0; j <= H; ++j) {
      for (std::size_t k = 0; k < sys.noutputs; ++k) known[sys.y(k, j)] = Zp(traj.output_jet(k, j, prime), prime);
      for (std::size_t l = 0; l < sys.ninputs; ++l) known[sys.u(l, j)] = Zp(traj.ujets[l][j], prime);
    }
    for (std::size_t q = 0; q < lam; ++q)
      if (in_T[q] || (pinned[q] && local[q])) known[sys.mu(q)] = Zp(traj.theta[q], prime);
    for (std::size_t i = 0; i < n; ++i)
      if (in_T[lam + i]) known[sys.x(i, 0)] = Zp(traj.theta[lam + i], prime);

    std::vector<ZpPoly> spec;
    std::vector<bool> used(E->nvars(), false);
    for (const auto& e : eqs) {
      ZpPoly s = algebra::specialize(algebra::reduce_mod(e, prime), known);
      if (s.is_zero()) continue;
      if (s.is_constant()) throw DegeneratePoint();
      spec.push_back(std::move(s));
    }
    std::vector<Elimination> elim = eliminate_linear(spec, kSubstitutionTerms);
    std::vector<std::ptrdiff_t> elim_of(E->nvars(), -1);
    for (std::size_t d = 0; d < elim.size(); ++d) elim_of[elim[d].var] = static_cast<std::ptrdiff_t>(d);
    for (const auto& s : spec) {
      auto sv = s.support_vars();
      for (std::size_t v = 0; v < sv.size(); ++v) used[v] = used[v] || sv[v];
    }
    for (const auto& d : elim) {
      auto sv = d.value.support_vars();
      for (std::size_t v = 0; v < sv.size(); ++v) used[v] = used[v] || sv[v];
    }

    // compact ring: z, jets state by state from the highest order down,
    // parameters, tags
    std::vector<std::size_t> order;
    if (used[0]) order.push_back(0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = H + 1; j-- > 0;)
        if (used[sys.x(i, j)]) order.push_back(sys.x(i, j));
    for (std::size_t q = 0; q < lam; ++q)
      if (used[sys.mu(q)]) order.push_back(sys.mu(q));
    for (auto t : tag_var)
      if (used[t]) order.push_back(t);
    std::vector<std::string> cnames;
    std::vector<std::size_t> cmap(E->nvars(), E->nvars());
    for (std::size_t c = 0; c < order.size(); ++c) {
      cnames.push_back(E->name(order[c]));
      cmap[order[c]] = c;
    }
    RingPtr C = algebra::make_ring(cnames);
    for (auto& s : spec) s = s.in_ring(C, cmap);

    auto target = [&](const Query& q) -> std::size_t {
      if (q.theta < 0) return tag_var[q.fn];
      std::size_t l = static_cast<std::size_t>(q.theta);
      return l < lam ? sys.mu(l) : sys.x(l - lam, 0);
    };
    auto sampled = [&](const Query& q) -> std::uint64_t {
      if (q.theta < 0) return fvals[q.fn].value;
      return traj.theta[static_cast<std::size_t>(q.theta)];
    };

    try {
      if (interrupt) interrupt->poll();
      algebra::GroebnerOptions gopt = opt.groebner;
      if (interrupt) gopt.interrupt = interrupt;
      algebra::Buchberger<Zp> bb(C, gopt);
      auto gb = bb.compute(spec);
      rep.groebner_steps = bb.steps();
      if (gb.is_unit()) throw DegeneratePoint();
      unsigned cap = 64;
      if (auto d = algebra::quotient_dimension(gb, 100000)) cap = static_cast<unsigned>(*d);
      for (auto& q : queries) {
        if (!open(q)) continue;
        Zp one(1, prime);
        ZpPoly elem(C);
        std::size_t tv = target(q);
        if (elim_of[tv] >= 0) {
          elem = elim[static_cast<std::size_t>(elim_of[tv])].value.in_ring(C, cmap);
        } else if (cmap[tv] < C->nvars()) {
          elem = ZpPoly::variable(C, cmap[tv], one);
        } else {
          continue;  // unconstrained by every equation
        }
        auto mp = algebra::minimal_polynomial_of(elem, gb, cap, interrupt);
        if (!mp) {
          rep.warnings.push_back("no minimal polynomial found for " + q.name);
          continue;
        }
        Zp at(0, prime), x(sampled(q), prime), pw = one;
        for (const auto& c : *mp) {
          at += c * pw;
          pw *= x;
        }
        if (!at.is_zero()) {
          rep.warnings.push_back("sampled value of " + q.name + " is not a root of its minimal polynomial");
          continue;
        }
        std::size_t roots = algebra::distinct_root_count(*mp);
        if (roots == 1) {
          q.verdict = Verdict::Global;
        } else if (roots > 1) {
          q.verdict = Verdict::Local;
        }
        q.count = roots;
      }
    } catch (const algebra::ResourceLimit& e) {
      rep.warnings.push_back(std::string("resource limit: ") + e.what());
    }
  }

  for (const auto& q : queries) {
    if (q.theta < 0) {
      res.functions.push_back({q.name, q.verdict, q.count});
      continue;
    }
    switch (q.verdict) {
      case Verdict::Global: rep.globally.push_back(q.name); break;
      case Verdict::Local: rep.locally_not_globally.push_back(q.name); break;
      case Verdict::NonIdentifiable: rep.non_identifiable.push_back(q.name); break;
      case Verdict::Undetermined: rep.undetermined.push_back(q.name); break;
    }
    if (opt.print_num_solutions && (q.verdict == Verdict::Global || q.verdict == Verdict::Local))
      rep.num_solutions[q.name] = q.count;
  }
  return res;
}

IdentReport assess(const ModelSystem& m, const AnalysisOptions& opt, std::uint64_t seed,
                   const algebra::Interrupt* interrupt) {
  return assess_full(m, opt, seed, {}, interrupt).report;
}

}  // namespace sia::sian
