#include "sia/algebra/gcd.hpp"

#include <algorithm>
#include <optional>

namespace sia::algebra {

namespace {

Rational make_q(const mpz_class& z) { return Rational(mpq_class(z)); }

mpz_class max_norm(const QPoly& p) {
  mpz_class m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_class a = abs(p.coeff(i).num());
    if (a > m) m = a;
  }
  return m;
}

mpz_class int_content(const QPoly& p) {
  mpz_class g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.coeff(i).num().get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

QPoly div_int(const QPoly& p, const mpz_class& c) {
  if (c == 1) return p;
  Rational inv(mpq_class(mpz_class(1), c));
  return p.scaled(inv);
}

// Highest-index variable occurring in f or g.
std::optional<std::size_t> main_var(const QPoly& f, const QPoly& g) {
  auto uf = f.support_vars();
  auto ug = g.support_vars();
  for (std::size_t v = uf.size(); v-- > 0;)
    if (uf[v] || ug[v]) return v;
  return std::nullopt;
}

// Monomial gcd of all terms of p with the monomial m (stride layout).
QPoly monomial_gcd(const QPoly& p, const Exponent* m) {
  const Ring& R = *p.ring();
  std::vector<Exponent> e(m, m + R.stride());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t v = 0; v < R.nvars(); ++v) {
      std::size_t s = R.nblocks() + v;
      e[s] = std::min(e[s], p.mono(i)[s]);
    }
  R.finish(e.data());
  return QPoly::monomial(p.ring(), Rational(1), e);
}

QPoly eval_at(const QPoly& p, std::size_t var, const mpz_class& x) {
  const Ring& R = *p.ring();
  unsigned d = p.degree(var);
  std::vector<mpz_class> pw(d + 1);
  pw[0] = 1;
  for (unsigned k = 1; k <= d; ++k) pw[k] = pw[k - 1] * x;
  std::vector<std::pair<Rational, std::vector<Exponent>>> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto m = p.mono_vec(i);
    Exponent e = m[R.nblocks() + var];
    m[R.nblocks() + var] = 0;
    R.finish(m.data());
    terms.emplace_back(Rational(mpq_class(p.coeff(i).value() * pw[e])), std::move(m));
  }
  return QPoly::from_terms(p.ring(), std::move(terms));
}

// Recover a polynomial in `var` from its image at var = x, digit by digit in
// the symmetric residue system.
QPoly interpolate(QPoly h, std::size_t var, const mpz_class& x) {
  const Ring& R = *h.ring();
  mpz_class half = x / 2;
  std::vector<std::pair<Rational, std::vector<Exponent>>> terms;
  Exponent i = 0;
  while (!h.is_zero()) {
    QPoly digit(h.ring());
    std::vector<std::pair<Rational, std::vector<Exponent>>> dt;
    for (std::size_t t = 0; t < h.size(); ++t) {
      mpz_class c = h.coeff(t).num();
      mpz_class r;
      mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), x.get_mpz_t());
      if (r > half) r -= x;
      if (r == 0) continue;
      dt.emplace_back(make_q(r), h.mono_vec(t));
      auto m = h.mono_vec(t);
      m[R.nblocks() + var] = i;
      R.finish(m.data());
      terms.emplace_back(make_q(r), std::move(m));
    }
    digit = QPoly::from_terms(h.ring(), std::move(dt));
    h = div_int(h - digit, x);
    ++i;
  }
  QPoly out = QPoly::from_terms(h.ring(), std::move(terms));
  if (!out.is_zero() && out.lc().sign() < 0) out = -out;
  return out;
}

bool divides(const QPoly& d, const QPoly& p) {
  try {
    (void)p.divide_exact(d);
    return true;
  } catch (const DivisionNotExact&) {
    return false;
  }
}

QPoly gcd_prs(const QPoly& f, const QPoly& g);

// Full integer gcd of integer polynomials (content included), or nullopt
// when the heuristic gives up.
std::optional<QPoly> heu_gcd(const QPoly& f, const QPoly& g) {
  const RingPtr& ring = f.ring();
  if (f.is_zero()) return g.is_zero() || g.lc().sign() > 0 ? g : -g;
  if (g.is_zero()) return f.lc().sign() > 0 ? f : -f;
  mpz_class cf = int_content(f), cg = int_content(g);
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  if (f.is_constant() || g.is_constant()) return q_const(ring, make_q(c));
  if (f.size() == 1) return monomial_gcd(g, f.lm()).scaled(make_q(c));
  if (g.size() == 1) return monomial_gcd(f, g.lm()).scaled(make_q(c));
  auto v = main_var(f, g);
  if (!v) return q_const(ring, make_q(c));

  QPoly pf = div_int(f, cf), pg = div_int(g, cg);
  mpz_class nf = max_norm(pf), ng = max_norm(pg);
  mpz_class B = 2 * std::min(nf, ng) + 29;
  mpz_class sq = sqrt(B);
  mpz_class x = std::min(B, mpz_class(99 * sq));
  mpz_class lf = abs(pf.lc().num()), lg = abs(pg.lc().num());
  mpz_class alt = 2 * std::min(mpz_class(nf / lf), mpz_class(ng / lg)) + 4;
  if (alt > x) x = alt;

  for (int attempt = 0; attempt < 6; ++attempt) {
    QPoly ff = eval_at(pf, *v, x), gg = eval_at(pg, *v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto h = heu_gcd(ff, gg);
      if (h) {
        QPoly cand = interpolate(*h, *v, x);
        if (!cand.is_zero()) {
          cand = div_int(cand, int_content(cand));
          if (divides(cand, pf) && divides(cand, pg)) return cand.scaled(make_q(c));
        }
      }
    }
    mpz_class r = sqrt(mpz_class(sqrt(x)));
    x = 73794 * x * r / 27011;
  }
  return std::nullopt;
}

// Coefficients of p as a polynomial in `var` (index = degree).
std::vector<QPoly> coeffs_in(const QPoly& p, std::size_t var) {
  const Ring& R = *p.ring();
  unsigned d = p.degree(var);
  std::vector<std::vector<std::pair<Rational, std::vector<Exponent>>>> parts(d + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto m = p.mono_vec(i);
    Exponent e = m[R.nblocks() + var];
    m[R.nblocks() + var] = 0;
    R.finish(m.data());
    parts[e].emplace_back(p.coeff(i), std::move(m));
  }
  std::vector<QPoly> out;
  for (auto& t : parts) out.push_back(QPoly::from_terms(p.ring(), std::move(t)));
  return out;
}

QPoly from_coeffs(const std::vector<QPoly>& c, std::size_t var, const RingPtr& ring) {
  QPoly acc(ring);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    acc += c[k].mul_term(Rational(1), ring->variable(var, static_cast<Exponent>(k)).data());
  }
  return acc;
}

QPoly content_in(const std::vector<QPoly>& c) {
  QPoly g;
  bool first = true;
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    g = first ? primitive_part(x) : gcd(g, x);
    first = false;
    if (g.is_constant()) break;
  }
  return g;
}

// Primitive pseudo-remainder sequence in the main variable.
QPoly gcd_prs(const QPoly& f, const QPoly& g) {
  auto v = main_var(f, g);
  if (!v) return q_const(f.ring(), Rational(1));
  auto a = coeffs_in(f, *v), b = coeffs_in(g, *v);
  if (a.size() < b.size()) std::swap(a, b);
  QPoly ca = content_in(a), cb = content_in(b);
  QPoly c = gcd(ca, cb);
  for (auto& x : a) x = x.divide_exact(ca);
  for (auto& x : b) x = x.divide_exact(cb);
  auto trim = [](std::vector<QPoly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  while (b.size() > 1) {
    // r = prem(a, b)
    std::vector<QPoly> r = a;
    const QPoly lb = b.back();
    while (r.size() >= b.size()) {
      QPoly lr = r.back();
      std::size_t shift = r.size() - b.size();
      for (auto& x : r) x = x * lb;
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= lr * b[i];
      r.pop_back();
      trim(r);
    }
    trim(r);
    if (r.empty()) break;
    if (r.size() == 1) {
      b = {q_const(f.ring(), Rational(1))};
      break;
    }
    QPoly cr = content_in(r);
    for (auto& x : r) x = x.divide_exact(cr);
    a = std::move(b);
    b = std::move(r);
  }
  QPoly res = from_coeffs(b, *v, f.ring()) * c;
  return primitive_part(res);
}

}  // namespace

mpz_class denominator_lcm(const QPoly& p) {
  mpz_class l = 1;
  for (std::size_t i = 0; i < p.size(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), p.coeff(i).den().get_mpz_t());
  return l;
}

Rational rational_content(const QPoly& p) {
  if (p.is_zero()) return Rational(1);
  mpz_class l = denominator_lcm(p);
  mpz_class g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_class n = p.coeff(i).num() * (l / p.coeff(i).den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class c(g, l);
  if (p.lc().sign() < 0) c = -c;
  return Rational(c);
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational c = rational_content(p);
  if (c.is_one()) return p;
  return p.scaled(c.inv());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  QPoly pa = primitive_part(a), pb = primitive_part(b);
  if (pa.is_constant() || pb.is_constant()) return q_const(a.ring(), Rational(1));
  if (pa == pb) return pa;
  if (pa.size() == 1) return monomial_gcd(pb, pa.lm());
  if (pb.size() == 1) return monomial_gcd(pa, pb.lm());
  if (divides(pa, pb)) return pa;
  if (divides(pb, pa)) return pb;
  if (auto h = heu_gcd(pa, pb)) return primitive_part(*h);
  return gcd_prs(pa, pb);
}

}  // namespace sia::algebra
