#include <algorithm>
#include <random>

#include "internal.hpp"
#include "sia/algebra/groebner.hpp"
#include "sia/identfield/identfield.hpp"

namespace sia::identfield {

using algebra::Exponent;
using algebra::QPoly;
using algebra::Rational;
using algebra::Zp;
using algebra::ZpPoly;

namespace {

// params ring extended by leading variables (z, w, tags ...)
RingPtr extended(const RingPtr& params, std::vector<std::string> head, std::vector<std::string> tail = {}) {
  std::set<std::string> taken(params->names().begin(), params->names().end());
  for (auto& h : head) h = detail::fresh(taken, h);
  for (auto& t : tail) t = detail::fresh(taken, t);
  std::vector<std::string> names = head;
  names.insert(names.end(), params->names().begin(), params->names().end());
  names.insert(names.end(), tail.begin(), tail.end());
  return algebra::make_ring(names);
}

std::vector<std::size_t> shifted(const RingPtr& params, std::size_t by) {
  std::vector<std::size_t> map(params->nvars());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = v + by;
  return map;
}

Zp eval_mod(const QPoly& p, const std::vector<Zp>& pt, std::uint32_t prime) {
  return algebra::evaluate(algebra::reduce_mod(p, prime), pt, Zp(0, prime));
}

/// Fibre of the generator map through a random point over GF(p).
class Fibre {
 public:
  Fibre(const std::vector<RatFun>& gens, const RatFun* extra_den, std::mt19937_64& rng,
        const algebra::GroebnerOptions& opt)
      : opt_(opt) {
    RingPtr P = gens.empty() ? (extra_den ? extra_den->ring() : nullptr) : gens.front().ring();
    if (!P) return;
    params_ = P;
    R_ = extended(P, {"z", "w"});
    auto map = shifted(P, 2);
    prime_ = algebra::pick_prime(rng);
    std::uniform_int_distribution<std::uint64_t> dist(1, prime_ - 1);
    for (int attempt = 0;; ++attempt) {
      if (attempt == 64) throw sian::DegeneratePoint();
      pt_.clear();
      for (std::size_t v = 0; v < P->nvars(); ++v) pt_.push_back(Zp(dist(rng), prime_));
      bool ok = true;
      for (const auto& g : gens) ok = ok && !eval_mod(g.den(), pt_, prime_).is_zero();
      if (extra_den) ok = ok && !eval_mod(extra_den->den(), pt_, prime_).is_zero();
      if (ok) break;
    }
    std::vector<ZpPoly> eqs;
    QPoly Q = algebra::q_const(R_, Rational(1));
    for (const auto& g : gens) {
      QPoly n = g.num().in_ring(R_, map), d = g.den().in_ring(R_, map);
      Zp v = value(g);
      eqs.push_back(algebra::reduce_mod(n, prime_) - algebra::reduce_mod(d, prime_).scaled(v));
      if (!d.is_constant()) Q *= d;
    }
    if (extra_den && !extra_den->den().is_constant()) Q *= extra_den->den().in_ring(R_, map);
    if (!Q.is_constant())
      eqs.push_back(algebra::reduce_mod(algebra::q_var(R_, 0) * Q - algebra::q_const(R_, Rational(1)), prime_));
    eqs_ = eqs;
    gb_ = algebra::groebner(R_, std::move(eqs), opt_);
  }

  Zp value(const RatFun& f) const {
    return eval_mod(f.num(), pt_, prime_) * eval_mod(f.den(), pt_, prime_).inv();
  }

  /// f constant on the fibre (radical membership).
  bool constant_on(const RatFun& f) const {
    if (f.is_constant()) return true;
    if (!params_) return false;
    auto map = shifted(params_, 2);
    ZpPoly h = algebra::reduce_mod(f.num().in_ring(R_, map), prime_) -
               algebra::reduce_mod(f.den().in_ring(R_, map), prime_).scaled(value(f));
    if (algebra::normal_form(h, gb_).is_zero()) return true;
    auto eqs = eqs_;
    ZpPoly one = ZpPoly::constant(R_, Zp(1, prime_));
    eqs.push_back(one - ZpPoly::variable(R_, 1, Zp(1, prime_)) * h);
    return algebra::groebner(R_, std::move(eqs), opt_).is_unit();
  }

 private:
  algebra::GroebnerOptions opt_;
  RingPtr params_, R_;
  std::uint32_t prime_ = 0;
  std::vector<Zp> pt_;
  std::vector<ZpPoly> eqs_;
  algebra::GroebnerBasis<Zp> gb_;
};

std::size_t terms(const RatFun& f) { return f.num().size() + f.den().size(); }
unsigned degree(const RatFun& f) { return f.num().total_degree() + f.den().total_degree(); }

// simpler first
bool simpler(const RatFun& a, const RatFun& b) {
  auto ka = std::make_tuple(degree(a), terms(a), a.str().size());
  auto kb = std::make_tuple(degree(b), terms(b), b.str().size());
  if (ka != kb) return ka < kb;
  return a.str() < b.str();
}

// Same field, tidier representative: f or 1/f, then a - b*f made primitive.
RatFun canonical(RatFun f) {
  if (f.is_constant()) return f;
  if (f.num().is_constant()) f = f.inv();
  QPoly n = f.num(), d = f.den();
  if (d.is_constant()) {
    n = n - algebra::q_const(n.ring(), n.constant_term(Rational(0)));
    n = algebra::primitive_part(n);
    return RatFun(n);
  }
  // content of numerator and denominator folded away
  n = algebra::primitive_part(n);
  d = algebra::primitive_part(d);
  return RatFun(n, d);
}

std::vector<RatFun> independent_subset(std::vector<RatFun> cands, std::uint64_t seed,
                                       const algebra::GroebnerOptions& opt) {
  std::sort(cands.begin(), cands.end(), simpler);
  std::vector<RatFun> keep;
  for (const auto& c : cands) {
    if (c.is_constant()) continue;
    if (!field_membership(c, keep, seed, opt)) keep.push_back(c);
  }
  // drop members generated by the rest, most complex first
  for (std::size_t i = keep.size(); i-- > 0;) {
    std::vector<RatFun> rest = keep;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (field_membership(keep[i], rest, seed, opt)) keep = rest;
  }
  std::sort(keep.begin(), keep.end(), simpler);
  return keep;
}

// Coefficients of the reduced basis of the generic fibre ideal over Q(mu^).
std::optional<std::vector<RatFun>> fibre_coefficients(const std::vector<RatFun>& gens,
                                                      const algebra::GroebnerOptions& opt) {
  const RingPtr& P = gens.front().ring();
  RingPtr M = extended(P, {"z"});
  using algebra::OrderBlock;
  M = algebra::make_ring(M->names(), algebra::TermOrder::from_blocks({{0, 1, OrderBlock::Kind::DegRevLex},
                                                                      {1, M->nvars(), OrderBlock::Kind::DegRevLex}}));
  auto lift = [&](const QPoly& p) {
    // polynomial in mu with rational constant coefficients
    std::vector<std::pair<RatFun, std::vector<Exponent>>> ts;
    for (std::size_t i = 0; i < p.size(); ++i) {
      std::vector<Exponent> e(M->nvars(), 0);
      for (std::size_t v = 0; v < P->nvars(); ++v) e[1 + v] = p.exp(i, v);
      ts.emplace_back(RatFun::constant(P, p.coeff(i)), M->monomial(e));
    }
    return KPoly::from_terms(M, std::move(ts));
  };
  std::vector<KPoly> eqs;
  KPoly Q = KPoly::constant(M, RatFun::constant(P, Rational(1)));
  for (const auto& g : gens) {
    eqs.push_back(lift(g.num()) - lift(g.den()).scaled(g));
    if (!g.den().is_constant()) Q *= lift(g.den());
  }
  const RatFun one = RatFun::constant(P, Rational(1));
  if (!Q.is_constant()) eqs.push_back(KPoly::variable(M, 0, one) * Q - KPoly::constant(M, one));
  try {
    auto gb = algebra::groebner(M, std::move(eqs), opt);
    std::vector<RatFun> out;
    for (const auto& g : gb.polys) {
      if (g.exp(0, 0)) continue;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (!g.coeff(i).is_constant()) out.push_back(g.coeff(i));
    }
    return out;
  } catch (const algebra::ResourceLimit&) {
    return std::nullopt;
  }
}

}  // namespace

bool field_membership(const RatFun& candidate, const std::vector<RatFun>& generators, std::uint64_t seed,
                      const algebra::GroebnerOptions& opt) {
  if (candidate.is_constant()) return true;
  for (const auto& g : generators)
    if (g == candidate) return true;
  std::mt19937_64 rng(seed);
  Fibre f(generators, &candidate, rng, opt);
  return f.constant_on(candidate);
}

bool field_membership_exact(const RatFun& candidate, const std::vector<RatFun>& generators,
                            const algebra::GroebnerOptions& opt) {
  if (candidate.is_constant()) return true;
  const RingPtr& P = candidate.ring();
  const std::size_t lam = P->nvars(), s = generators.size();
  std::vector<std::string> tags;
  for (std::size_t i = 0; i < s; ++i) tags.push_back("t" + std::to_string(i + 1));
  RingPtr base = extended(P, {"z"}, [&] {
    auto t = std::vector<std::string>{"tc"};
    t.insert(t.end(), tags.begin(), tags.end());
    return t;
  }());
  using algebra::OrderBlock;
  // [z, mu] >> [tc] >> [t_1..t_s]
  RingPtr R = algebra::make_ring(base->names(), algebra::TermOrder::from_blocks(
                                                    {{0, 1 + lam, OrderBlock::Kind::DegRevLex},
                                                     {1 + lam, 2 + lam, OrderBlock::Kind::DegRevLex},
                                                     {2 + lam, 2 + lam + s, OrderBlock::Kind::DegRevLex}}));
  auto map = shifted(P, 1);
  std::vector<QPoly> eqs;
  QPoly Q = algebra::q_const(R, Rational(1));
  auto tag = [&](const RatFun& f, std::size_t var) {
    QPoly d = f.den().in_ring(R, map);
    eqs.push_back(d * algebra::q_var(R, var) - f.num().in_ring(R, map));
    if (!d.is_constant()) Q *= d;
  };
  tag(candidate, 1 + lam);
  for (std::size_t i = 0; i < s; ++i) tag(generators[i], 2 + lam + i);
  if (!Q.is_constant()) eqs.push_back(algebra::q_var(R, 0) * Q - algebra::q_const(R, Rational(1)));
  auto gb = algebra::groebner(R, std::move(eqs), opt);
  for (const auto& g : gb.polys) {
    bool free = true;
    for (std::size_t v = 0; v <= lam && free; ++v) free = g.exp(0, v) == 0;
    if (free && g.exp(0, 1 + lam) == 1) return true;
  }
  return false;
}

bool fields_equal(const std::vector<RatFun>& a, const std::vector<RatFun>& b, std::uint64_t seed,
                  const algebra::GroebnerOptions& opt) {
  for (const auto& f : a)
    if (!field_membership(f, b, seed, opt)) return false;
  for (const auto& f : b)
    if (!field_membership(f, a, seed, opt)) return false;
  return true;
}

std::vector<RatFun> simplify_generators(const std::vector<RatFun>& gens, std::uint64_t seed,
                                        const algebra::GroebnerOptions& opt) {
  std::vector<RatFun> cands;
  for (const auto& g : gens)
    if (!g.is_constant()) cands.push_back(canonical(g));
  auto base = independent_subset(cands, seed, opt);
  if (base.empty()) return base;
  algebra::GroebnerOptions small = opt;
  small.max_steps = std::min<std::size_t>(opt.max_steps, 20000);
  auto coeffs = fibre_coefficients(base, small);
  if (!coeffs) return base;
  std::vector<RatFun> nice;
  for (const auto& c : *coeffs) nice.push_back(canonical(c));
  nice = independent_subset(nice, seed, opt);
  // the coefficients generate the same field; keep the base if a check fails
  if (!fields_equal(nice, base, seed, opt)) return base;
  return nice;
}

}  // namespace sia::identfield
