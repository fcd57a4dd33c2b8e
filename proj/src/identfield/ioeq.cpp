#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "../sian/series.hpp"
#include "internal.hpp"
#include "sia/algebra/groebner.hpp"
#include "sia/identfield/identfield.hpp"

namespace sia::identfield {

using algebra::Exponent;
using algebra::QPoly;
using algebra::Rational;
using algebra::Zp;
using algebra::ZpPoly;
using sian::detail::DualSeries;
using sian::detail::Echelon;

RingPtr parameter_ring(const ModelSystem& m) { return algebra::make_ring(m.params); }

RatFun to_params(const ModelSystem& m, const RingPtr& params, const RatFun& f) {
  std::vector<std::size_t> map(m.ring->nvars(), 0);
  auto used = f.num().support_vars();
  auto dused = f.den().support_vars();
  for (std::size_t v = 0; v < map.size(); ++v) {
    bool param = v >= m.param_var(0) && !m.params.empty();
    if ((used[v] || dused[v]) && !param) throw std::invalid_argument("function of the parameters expected");
    if (param) map[v] = v - m.param_var(0);
  }
  return f.in_ring(params, map);
}

RatFun to_model(const ModelSystem& m, const RatFun& f) {
  std::vector<std::size_t> map(m.params.size());
  std::iota(map.begin(), map.end(), m.param_var(0));
  return f.in_ring(m.ring, map);
}

namespace detail {

std::string fresh(std::set<std::string>& taken, std::string base) {
  while (taken.count(base)) base += "_";
  taken.insert(base);
  return base;
}

LieRing::LieRing(const ModelSystem& m, std::size_t J) : n(m.states.size()), nu(m.inputs.size()), J(J) {
  std::set<std::string> taken(m.states.begin(), m.states.end());
  taken.insert(m.params.begin(), m.params.end());
  std::vector<std::string> names = m.states;
  for (const auto& u : m.inputs)
    for (std::size_t j = 0; j <= J; ++j) names.push_back(fresh(taken, u + "_" + std::to_string(j)));
  names.insert(names.end(), m.params.begin(), m.params.end());
  ring = algebra::make_ring(names);
  std::vector<std::size_t> map(m.ring->nvars(), 0);
  for (std::size_t i = 0; i < n; ++i) map[m.state_var(i)] = x(i);
  for (std::size_t l = 0; l < nu; ++l) map[m.input_var(l)] = u(l, 0);
  for (std::size_t q = 0; q < m.params.size(); ++q) map[m.param_var(q)] = mu(q);
  for (const auto& f : m.odes) f_.push_back(f.in_ring(ring, map));
  for (const auto& g : m.obs) g_.push_back(g.in_ring(ring, map));
}

RatFun LieRing::derive(const RatFun& h) const {
  auto used = h.num().support_vars();
  auto dused = h.den().support_vars();
  RatFun acc = h.zero_like();
  for (std::size_t i = 0; i < n; ++i)
    if (used[x(i)] || dused[x(i)]) acc += h.derivative(x(i)) * f_[i];
  for (std::size_t l = 0; l < nu; ++l)
    for (std::size_t j = 0; j <= J; ++j) {
      if (!used[u(l, j)] && !dused[u(l, j)]) continue;
      if (j == J) throw std::logic_error("input jet order exceeded");
      acc += h.derivative(u(l, j)) * RatFun::variable(ring, u(l, j + 1));
    }
  return acc;
}

QPoly LieRing::state_denominators() const {
  QPoly q = algebra::q_const(ring, Rational(1));
  auto fold = [&](const RatFun& f) {
    QPoly d = f.den();
    if (d.is_constant()) return;
    QPoly g = algebra::gcd(q, d);
    q = q * d.divide_exact(g);
  };
  for (const auto& f : f_) fold(f);
  for (const auto& g : g_) fold(g);
  return q;
}

JetNames::JetNames(const ModelSystem& m, std::size_t J) {
  std::set<std::string> taken;
  for (const auto& y : m.outputs) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j <= J; ++j) row.push_back(fresh(taken, y + "_" + std::to_string(j)));
    y_.push_back(row);
  }
  for (const auto& u : m.inputs) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j <= J; ++j) row.push_back(fresh(taken, u + "_" + std::to_string(j)));
    u_.push_back(row);
  }
  all_ = taken;
}

std::vector<Leader> triangular_structure(const ModelSystem& m, const Ranking& ranking,
                                        const std::vector<std::uint64_t>& mu, std::uint32_t p, std::mt19937_64& rng) {
  const std::size_t n = m.states.size(), len = n + 2;
  Trajectory t = trajectory(m, mu, len, true, p, rng);
  // lowest jet first
  const std::vector<std::size_t> low(ranking.outputs.rbegin(), ranking.outputs.rend());
  std::vector<Jet> order;
  if (ranking.kind == RankingKind::Orderly) {
    for (std::size_t j = 0; j <= n; ++j)
      for (std::size_t k : low) order.push_back({false, k, static_cast<unsigned>(j)});
  } else {
    for (std::size_t k : low)
      for (std::size_t j = 0; j <= n; ++j) order.push_back({false, k, static_cast<unsigned>(j)});
  }
  Echelon e(n, p);
  std::vector<Jet> free;
  std::vector<bool> led(m.outputs.size(), false);
  std::vector<Leader> out;
  for (const Jet& jt : order) {
    if (led[jt.index]) continue;
    const auto& s = t.sol.outputs[jt.index];
    std::vector<std::uint64_t> row(n);
    for (std::size_t d = 0; d < n; ++d) row[d] = s.at(jt.order, 1 + d);
    if (e.add(row)) {
      free.push_back(jt);
      continue;
    }
    led[jt.index] = true;
    Leader l{jt, {jt}};
    l.jets.insert(l.jets.end(), free.rbegin(), free.rend());
    out.push_back(std::move(l));
    if (out.size() == m.outputs.size()) break;
  }
  return out;
}

Trajectory trajectory(const ModelSystem& m, const std::vector<std::uint64_t>& mu, std::size_t len, bool seeded,
                      std::uint32_t p, std::mt19937_64& rng) {
  const std::size_t n = m.states.size(), width = seeded ? 1 + n : 1;
  std::vector<ZpPoly> fnum, fden, gnum, gden;
  for (const auto& f : m.odes) {
    fnum.push_back(algebra::reduce_mod(f.num(), p));
    fden.push_back(algebra::reduce_mod(f.den(), p));
  }
  for (const auto& g : m.obs) {
    gnum.push_back(algebra::reduce_mod(g.num(), p));
    gden.push_back(algebra::reduce_mod(g.den(), p));
  }
  std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<DualSeries> vars(m.ring->nvars(), DualSeries(len, width, p));
    for (std::size_t q = 0; q < m.params.size(); ++q) vars[m.param_var(q)].at(0, 0) = mu[q];
    for (std::size_t i = 0; i < n; ++i) {
      auto& s = vars[m.state_var(i)];
      s.at(0, 0) = dist(rng);
      if (seeded) s.at(0, 1 + i) = 1;
    }
    Trajectory t;
    for (std::size_t l = 0; l < m.inputs.size(); ++l) {
      auto& s = vars[m.input_var(l)];
      for (std::size_t j = 0; j < len; ++j) s.at(j, 0) = dist(rng);
      t.inputs.push_back(s);
    }
    t.sol = sian::detail::solve_series(fnum, fden, gnum, gden, std::move(vars), n, len, width, p);
    if (!t.sol.degenerate) return t;
  }
  throw sian::DegeneratePoint();
}

namespace {

// Series of the j-th derivative: coefficient i is c_{i+j} (i+j)!/i!.
DualSeries derived(const DualSeries& s, std::size_t j, std::size_t len, std::uint32_t p) {
  DualSeries out(len, 1, p);
  for (std::size_t i = 0; i < len; ++i) {
    if (i + j >= s.len()) throw std::logic_error("trajectory too short");
    std::uint64_t c = s.at(i + j, 0);
    for (std::size_t f = i + 1; f <= i + j; ++f) c = c * f % p;
    out.at(i, 0) = c;
  }
  return out;
}

}  // namespace

Elimination::Elimination(const ModelSystem& m, const LieRing& lie, const JetNames& names,
                         const std::vector<Jet>& jets, const std::vector<std::vector<RatFun>>& lie_jets) {
  const std::size_t n = m.states.size();
  std::set<std::string> taken = names.all();
  taken.insert(m.params.begin(), m.params.end());
  std::vector<std::string> head{fresh(taken, "z")};
  for (const auto& x : m.states) head.push_back(fresh(taken, x));
  nelim = head.size();

  // provisional ring with every input jet; unused ones are dropped below
  std::vector<Jet> all = jets;
  for (std::size_t l = 0; l < m.inputs.size(); ++l)
    for (std::size_t j = lie.J + 1; j-- > 0;) all.push_back({true, l, static_cast<unsigned>(j)});
  auto build = [&](const std::vector<Jet>& js) {
    std::vector<std::string> nm = head;
    for (const auto& jt : js) nm.push_back(names.name(jt));
    nm.insert(nm.end(), m.params.begin(), m.params.end());
    const std::size_t a = nelim, b = nelim + js.size();
    using algebra::OrderBlock;
    return algebra::make_ring(nm, algebra::TermOrder::from_blocks({{0, a, OrderBlock::Kind::DegRevLex},
                                                                   {a, b, OrderBlock::Kind::DegRevLex},
                                                                   {b, nm.size(), OrderBlock::Kind::DegRevLex}}));
  };
  RingPtr wide = build(all);
  auto lie_map = [&](const RingPtr& R, const std::vector<Jet>& js) {
    std::vector<std::size_t> map(lie.ring->nvars(), 0);
    for (std::size_t i = 0; i < n; ++i) map[lie.x(i)] = 1 + i;
    for (std::size_t t = 0; t < js.size(); ++t)
      if (js[t].input) map[lie.u(js[t].index, js[t].order)] = nelim + t;
    for (std::size_t q = 0; q < m.params.size(); ++q) map[lie.mu(q)] = R->nvars() - m.params.size() + q;
    return map;
  };
  auto make = [&](const RingPtr& R, const std::vector<Jet>& js) {
    auto map = lie_map(R, js);
    std::vector<QPoly> out;
    for (std::size_t t = 0; t < js.size(); ++t) {
      if (js[t].input) continue;
      const RatFun& f = lie_jets[js[t].index][js[t].order];
      out.push_back(f.den().in_ring(R, map) * algebra::q_var(R, nelim + t) - f.num().in_ring(R, map));
    }
    QPoly q = lie.state_denominators();
    if (!q.is_constant()) out.push_back(algebra::q_var(R, 0) * q.in_ring(R, map) - algebra::q_const(R, Rational(1)));
    return out;
  };
  auto provisional = make(wide, all);
  std::vector<bool> used(wide->nvars(), false);
  for (const auto& p : provisional) {
    auto u = p.support_vars();
    for (std::size_t v = 0; v < u.size(); ++v) used[v] = used[v] || u[v];
  }
  for (std::size_t t = 0; t < all.size(); ++t)
    if (!all[t].input || used[nelim + t]) this->jets.push_back(all[t]);
  ring = build(this->jets);
  gens = make(ring, this->jets);

  std::vector<std::string> gnames(ring->names().begin(), ring->names().end() - static_cast<std::ptrdiff_t>(m.params.size()));
  using algebra::OrderBlock;
  elim_ring = algebra::make_ring(gnames, algebra::TermOrder::from_blocks({{0, nelim, OrderBlock::Kind::DegRevLex},
                                                                          {nelim, gnames.size(), OrderBlock::Kind::DegRevLex}}));
  nparams = m.params.size();
}

KPoly Elimination::over_field(const QPoly& p, const RingPtr& params) const {
  const std::size_t base = elim_ring->nvars();
  std::vector<std::pair<RatFun, std::vector<Exponent>>> terms;
  std::vector<Exponent> e(base), pe(nparams);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t v = 0; v < base; ++v) e[v] = p.exp(i, v);
    for (std::size_t q = 0; q < nparams; ++q) pe[q] = p.exp(i, base + q);
    QPoly c = QPoly::monomial(params, p.coeff(i), params->monomial(pe));
    terms.emplace_back(RatFun(c), elim_ring->monomial(e));
  }
  return KPoly::from_terms(elim_ring, std::move(terms));
}

ZpPoly Elimination::specialized(const QPoly& p, const std::vector<std::uint64_t>& mu, std::uint32_t prime) const {
  const std::size_t base = elim_ring->nvars();
  std::vector<std::pair<Zp, std::vector<Exponent>>> terms;
  std::vector<Exponent> e(base);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t v = 0; v < base; ++v) e[v] = p.exp(i, v);
    Zp c = Zp::from_rational(p.coeff(i), prime);
    for (std::size_t q = 0; q < nparams; ++q)
      for (Exponent k = 0; k < p.exp(i, base + q); ++k) c *= Zp(mu[q], prime);
    terms.emplace_back(c, elim_ring->monomial(e));
  }
  return ZpPoly::from_terms(elim_ring, std::move(terms));
}

std::vector<std::vector<RatFun>> lie_derivatives(const LieRing& lie, const std::vector<Leader>& eqs, std::size_t ny) {
  std::vector<unsigned> h(ny, 0);
  for (const auto& l : eqs)
    for (const auto& jt : l.jets) h[jt.index] = std::max(h[jt.index], jt.order);
  std::vector<std::vector<RatFun>> out(ny);
  for (std::size_t k = 0; k < ny; ++k) {
    out[k].push_back(lie.output(k));
    for (unsigned j = 1; j <= h[k]; ++j) out[k].push_back(lie.derive(out[k].back()));
  }
  return out;
}

Ranking check_ranking(const ModelSystem& m, Ranking ranking) {
  if (ranking.outputs.empty()) {
    ranking.outputs.resize(m.outputs.size());
    std::iota(ranking.outputs.begin(), ranking.outputs.end(), 0);
  }
  auto s = ranking.outputs;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] != i || s.size() != m.outputs.size()) throw std::invalid_argument("ranking must permute the outputs");
  return ranking;
}

std::vector<std::uint64_t> random_params(const ModelSystem& m, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1, p - 1);
  std::vector<std::uint64_t> mu(m.params.size());
  for (auto& v : mu) v = dist(rng);
  return mu;
}

// Eliminant: the basis element free of z and the states with least leading monomial.
template <class K>
std::optional<algebra::Poly<K>> eliminant(const algebra::GroebnerBasis<K>& gb, std::size_t nelim) {
  for (const auto& g : gb.polys) {
    bool free = true;
    for (std::size_t v = 0; v < nelim && free; ++v) free = g.exp(0, v) == 0;
    if (free) return g;
  }
  return std::nullopt;
}

}  // namespace detail

using namespace detail;

IOEquationSet io_equations(const ModelSystem& m, Ranking ranking, const algebra::GroebnerOptions& opt,
                           std::uint64_t seed) {
  ranking = check_ranking(m, std::move(ranking));
  const std::size_t n = m.states.size();
  std::mt19937_64 rng(seed);
  const std::uint32_t p = algebra::pick_prime(rng);
  auto mu = random_params(m, p, rng);
  auto tri = triangular_structure(m, ranking, mu, p, rng);

  IOEquationSet io;
  io.ranking = ranking;
  io.jet_order = n;
  io.noutputs = m.outputs.size();
  io.ninputs = m.inputs.size();
  io.params = parameter_ring(m);
  LieRing lie(m, n);
  JetNames names(m, n);
  std::vector<std::string> all;
  for (std::size_t k = 0; k < io.noutputs; ++k)
    for (std::size_t j = 0; j <= n; ++j) all.push_back(names.name({false, k, static_cast<unsigned>(j)}));
  for (std::size_t l = 0; l < io.ninputs; ++l)
    for (std::size_t j = 0; j <= n; ++j) all.push_back(names.name({true, l, static_cast<unsigned>(j)}));
  io.ring = algebra::make_ring(all);

  auto lj = lie_derivatives(lie, tri, io.noutputs);
  for (const auto& lead : tri) {
    Elimination el(m, lie, names, lead.jets, lj);
    std::vector<KPoly> gens;
    for (const auto& g : el.gens) gens.push_back(el.over_field(g, io.params));
    auto gb = algebra::groebner(el.elim_ring, std::move(gens), opt);
    auto e = eliminant(gb, el.nelim);
    if (!e) throw std::logic_error("no input-output relation for " + m.outputs[lead.leader.index]);
    std::vector<std::size_t> map(el.elim_ring->nvars(), 0);
    for (std::size_t t = 0; t < el.jets.size(); ++t) {
      const Jet& jt = el.jets[t];
      map[el.nelim + t] = jt.input ? io.u(jt.index, jt.order) : io.y(jt.index, jt.order);
    }
    io.equations.push_back({lead.leader.index, lead.leader.order, e->in_ring(io.ring, map).monic()});
  }
  return io;
}

std::vector<std::vector<std::uint64_t>> detail::taylor_rows(const ZpPoly& e, const Elimination& el,
                                                            const Trajectory& t, std::uint32_t p) {
  const std::size_t N = e.size();
  std::vector<DualSeries> jets;
  for (const auto& jt : el.jets) {
    const DualSeries& s = jt.input ? t.inputs[jt.index] : t.sol.outputs[jt.index];
    jets.push_back(detail::derived(s, jt.order, N, p));
  }
  std::vector<std::vector<std::uint64_t>> rows(N, std::vector<std::uint64_t>(N));
  for (std::size_t l = 0; l < N; ++l) {
    DualSeries acc(N, 1, p);
    acc.at(0, 0) = 1;
    for (std::size_t v = 0; v < el.jets.size(); ++v)
      for (Exponent k = 0; k < e.exp(l, el.nelim + v); ++k) acc = acc.mul(jets[v]);
    for (std::size_t r = 0; r < N; ++r) rows[r][l] = acc.at(r, 0);
  }
  return rows;
}

unsigned experiment_bound(const ModelSystem& m, Ranking ranking, const algebra::GroebnerOptions& opt,
                          std::uint64_t seed) {
  ranking = check_ranking(m, std::move(ranking));
  const std::size_t n = m.states.size();
  std::mt19937_64 rng(seed);
  const std::uint32_t p = algebra::pick_prime(rng);
  auto mu = random_params(m, p, rng);
  auto tri = triangular_structure(m, ranking, mu, p, rng);
  LieRing lie(m, n);
  JetNames names(m, n);
  auto lj = lie_derivatives(lie, tri, m.outputs.size());
  unsigned beta = 1;
  for (const auto& lead : tri) {
    Elimination el(m, lie, names, lead.jets, lj);
    std::vector<ZpPoly> gens;
    for (const auto& g : el.gens) gens.push_back(el.specialized(g, mu, p));
    auto gb = algebra::groebner(el.elim_ring, std::move(gens), opt);
    auto e = eliminant(gb, el.nelim);
    if (!e) throw std::logic_error("no input-output relation for " + m.outputs[lead.leader.index]);
    std::size_t top = 0;
    for (const auto& jt : el.jets) top = std::max<std::size_t>(top, jt.order);
    const std::size_t N = e->size();
    Echelon ech(N, p);
    // each trajectory adds at least one row unless the point is degenerate
    unsigned k = 0;
    while (ech.rank() + 1 < N && k + 1 < N) {
      Trajectory t = trajectory(m, mu, top + N + 1, false, p, rng);
      for (auto& row : taylor_rows(*e, el, t, p)) ech.add(std::move(row));
      ++k;
    }
    beta = std::max(beta, k);
  }
  return beta;
}

}  // namespace sia::identfield
