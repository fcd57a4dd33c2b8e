#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sia/algebra/budget.hpp"
#include "sia/algebra/poly.hpp"

namespace sia::algebra {

struct NotZeroDimensional : std::domain_error {
  NotZeroDimensional() : std::domain_error("ideal is not zero-dimensional") {}
};

/// Reduced Groebner basis: monic generators sorted by increasing leading monomial.
template <class K>
struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly<K>> polys;
  bool reduced = true;

  bool is_unit() const { return polys.size() == 1 && polys.front().is_constant(); }
  std::size_t size() const { return polys.size(); }
};

namespace detail {

// h[start+1..] - c * m * g[1..]; the leading terms are known to cancel.
template <class K>
Poly<K> cancel_lead(const Poly<K>& h, std::size_t start, const K& c, const Exponent* m, const Poly<K>& g) {
  const Ring& R = *h.ring();
  const std::size_t s = R.stride();
  Poly<K> out(h.ring());
  out.reserve(h.size() - start + g.size());
  std::vector<Exponent> gm(s);
  std::size_t i = start + 1, j = 1;
  bool have = false;
  auto load = [&]() {
    have = j < g.size();
    if (have) R.mul(g.mono(j), m, gm.data());
  };
  load();
  while (i < h.size() && have) {
    int cmp = R.compare(h.mono(i), gm.data());
    if (cmp > 0) {
      out.push_back(h.coeff(i), h.mono(i));
      ++i;
    } else if (cmp < 0) {
      out.push_back(-(g.coeff(j) * c), gm.data());
      ++j;
      load();
    } else {
      K v = h.coeff(i) - g.coeff(j) * c;
      if (!v.is_zero()) out.push_back(v, h.mono(i));
      ++i;
      ++j;
      load();
    }
  }
  for (; i < h.size(); ++i) out.push_back(h.coeff(i), h.mono(i));
  while (have) {
    out.push_back(-(g.coeff(j) * c), gm.data());
    ++j;
    load();
  }
  return out;
}

// c * m * g[1..]
template <class K>
Poly<K> mul_tail(const Poly<K>& g, const K& c, const Exponent* m) {
  const Ring& R = *g.ring();
  Poly<K> out(g.ring());
  out.reserve(g.size() - 1);
  std::vector<Exponent> gm(R.stride());
  for (std::size_t j = 1; j < g.size(); ++j) {
    R.mul(g.mono(j), m, gm.data());
    out.push_back(g.coeff(j) * c, gm.data());
  }
  return out;
}

/// Sum of polynomials kept in buckets of geometrically growing size, so a
/// long remainder is not copied on every reduction step.
template <class K>
class Geobucket {
 public:
  explicit Geobucket(RingPtr ring) : ring_(std::move(ring)) {}

  void add(Poly<K> p) {
    if (p.is_zero()) return;
    std::size_t i = 0;
    for (;;) {
      while (cap(i) < p.size()) ++i;
      if (i >= b_.size()) b_.resize(i + 1, Slot{Poly<K>(ring_), 0});
      if (b_[i].empty()) {
        b_[i] = Slot{std::move(p), 0};
        return;
      }
      p = p + b_[i].take();
    }
  }

  /// Removes the leading term; false when the sum is zero.
  bool pop_lead(K& c, std::vector<Exponent>& m) {
    const Ring& R = *ring_;
    for (;;) {
      std::ptrdiff_t best = -1;
      for (std::size_t i = 0; i < b_.size(); ++i) {
        if (b_[i].empty()) continue;
        if (best < 0 || R.compare(b_[i].lm(), b_[static_cast<std::size_t>(best)].lm()) > 0)
          best = static_cast<std::ptrdiff_t>(i);
      }
      if (best < 0) return false;
      const Exponent* lm = b_[static_cast<std::size_t>(best)].lm();
      m.assign(lm, lm + R.stride());
      bool first = true;
      for (auto& sl : b_) {
        if (sl.empty() || R.compare(sl.lm(), m.data()) != 0) continue;
        if (first) c = sl.lc();
        else c += sl.lc();
        first = false;
        ++sl.off;
      }
      if (!c.is_zero()) return true;
    }
  }

  Poly<K> collapse() {
    Poly<K> acc(ring_);
    for (auto& sl : b_)
      if (!sl.empty()) acc += sl.take();
    return acc;
  }

 private:
  struct Slot {
    Poly<K> p;
    std::size_t off;
    bool empty() const { return off >= p.size(); }
    const Exponent* lm() const { return p.mono(off); }
    const K& lc() const { return p.coeff(off); }
    Poly<K> take() {
      Poly<K> out(p.ring());
      if (off == 0) {
        out = std::move(p);
      } else {
        out.reserve(p.size() - off);
        for (std::size_t t = off; t < p.size(); ++t) out.push_back(p.coeff(t), p.mono(t));
      }
      p = Poly<K>(out.ring());
      off = 0;
      return out;
    }
  };
  static std::size_t cap(std::size_t i) { return std::size_t{4} << (2 * i); }

  RingPtr ring_;
  std::vector<Slot> b_;
};

}  // namespace detail

/// Buchberger's algorithm with the Gebauer-Moeller installation of the
/// product and chain criteria. Pairs are taken by lcm degree (normal
/// strategy) or by sugar; the sugar degree is tracked either way.
template <class K>
class Buchberger {
 public:
  Buchberger(RingPtr ring, GroebnerOptions opt) : ring_(std::move(ring)), opt_(opt) {}

  GroebnerBasis<K> compute(std::vector<Poly<K>> gens) {
    std::sort(gens.begin(), gens.end(), [&](const Poly<K>& a, const Poly<K>& b) {
      if (a.is_zero() || b.is_zero()) return !a.is_zero() && b.is_zero();
      return ring_->compare(a.lm(), b.lm()) < 0;
    });
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      if (g.ring() != ring_ && !g.ring()->same_as(*ring_)) throw std::invalid_argument("generator ring mismatch");
      unsigned sugar = g.total_degree();
      Poly<K> h = reduce(g, sugar, true);
      if (h.is_zero()) continue;
      insert(h.monic(), sugar);
      if (unit_found_) break;
    }
    while (!pairs_.empty() && !unit_found_) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair p = std::move(pairs_[best]);
      pairs_[best] = std::move(pairs_.back());
      pairs_.pop_back();
      unsigned sugar = p.sugar;
      Poly<K> s = spoly(p);
      Poly<K> h = reduce(s, sugar, true);
      if (!h.is_zero()) insert(h.monic(), sugar);
    }
    return finish();
  }

  std::size_t steps() const { return steps_; }

  /// Full reduction of f by the current basis elements.
  Poly<K> reduce(const Poly<K>& f, unsigned& sugar, bool full) {
    detail::Geobucket<K> h(ring_);
    h.add(f);
    Poly<K> res(ring_);
    K c;
    std::vector<Exponent> lm, m(ring_->stride());
    while (h.pop_lead(c, lm)) {
      const Elem* g = find_reducer(lm.data());
      if (!g) {
        res.push_back(c, lm.data());
        if (!full) return res + h.collapse();
        continue;
      }
      tick();
      ring_->div(lm.data(), g->p.lm(), m.data());
      sugar = std::max(sugar, g->sugar + ring_->total_degree(m.data()));
      h.add(detail::mul_tail(g->p, -c, m.data()));  // basis elements are monic
    }
    return res;
  }

 private:
  struct Elem {
    Poly<K> p;
    unsigned sugar;
    std::uint64_t mask;
    bool active;
  };
  struct Pair {
    std::size_t i, j;
    std::vector<Exponent> lcm;
    unsigned sugar;
  };

  void tick() {
    if (++steps_ > opt_.max_steps) throw ResourceLimit("Groebner basis exceeded the reduction step budget");
    if (opt_.interrupt && (steps_ & 255u) == 0) opt_.interrupt->poll();
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (opt_.selection == PairSelection::Normal) {
      unsigned da = ring_->total_degree(a.lcm.data()), db = ring_->total_degree(b.lcm.data());
      if (da != db) return da < db;
    } else if (a.sugar != b.sugar) {
      return a.sugar < b.sugar;
    }
    int c = ring_->compare(a.lcm.data(), b.lcm.data());
    if (c != 0) return c < 0;
    return a.j < b.j;
  }

  const Elem* find_reducer(const Exponent* m) const {
    std::uint64_t mask = ring_->divmask(m);
    for (const auto& e : basis_)
      if ((e.mask & ~mask) == 0 && ring_->divides(e.p.lm(), m)) return &e;  // oldest divisor
    return nullptr;
  }

  Poly<K> spoly(const Pair& p) {
    const Poly<K>& f = basis_[p.i].p;
    const Poly<K>& g = basis_[p.j].p;
    std::vector<Exponent> mf(ring_->stride()), mg(ring_->stride());
    ring_->div(p.lcm.data(), f.lm(), mf.data());
    ring_->div(p.lcm.data(), g.lm(), mg.data());
    // both monic: S = mf*f - mg*g, leading terms cancel
    Poly<K> a = f.mul_term(f.lc().one_like(), mf.data());
    return detail::cancel_lead(a, 0, f.lc().one_like(), mg.data(), g);
  }

  void insert(Poly<K> h, unsigned sugar) {
    tick();
    if (h.is_constant()) unit_found_ = true;
    const std::size_t n = basis_.size();
    const std::size_t s = ring_->stride();
    std::vector<Exponent> tmp(s);

    // Candidate pairs (k, n) for active k.
    std::vector<Pair> cand;
    for (std::size_t k = 0; k < n; ++k) {
      if (!basis_[k].active) continue;
      Pair p{k, n, std::vector<Exponent>(s), 0};
      ring_->lcm(basis_[k].p.lm(), h.lm(), p.lcm.data());
      ring_->div(p.lcm.data(), basis_[k].p.lm(), tmp.data());
      unsigned s1 = basis_[k].sugar + ring_->total_degree(tmp.data());
      ring_->div(p.lcm.data(), h.lm(), tmp.data());
      unsigned s2 = sugar + ring_->total_degree(tmp.data());
      p.sugar = std::max(s1, s2);
      if (ring_->total_degree(p.lcm.data()) > opt_.max_degree)
        throw ResourceLimit("Groebner basis exceeded the degree cap");
      cand.push_back(std::move(p));
    }
    // Chain criterion among the new pairs: drop (k,n) if another new pair's
    // lcm properly divides it; among equal lcms keep one, preferring a
    // coprime pair so the product criterion can discard the whole class.
    std::vector<bool> keep(cand.size(), true);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (!ring_->divides(cand[b].lcm.data(), cand[a].lcm.data())) continue;
        bool equal = ring_->compare(cand[a].lcm.data(), cand[b].lcm.data()) == 0;
        if (!equal) {
          keep[a] = false;
        } else {
          bool a_coprime = ring_->coprime(basis_[cand[a].i].p.lm(), h.lm());
          bool b_coprime = ring_->coprime(basis_[cand[b].i].p.lm(), h.lm());
          if (b_coprime && !a_coprime) keep[a] = false;
          else if (a_coprime == b_coprime && b < a) keep[a] = false;
        }
      }
    }
    // Product criterion.
    std::vector<Pair> fresh;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (ring_->coprime(basis_[cand[a].i].p.lm(), h.lm())) continue;
      fresh.push_back(std::move(cand[a]));
    }
    // Criterion B on the old pairs.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (ring_->divides(h.lm(), p.lcm.data())) {
        ring_->lcm(basis_[p.i].p.lm(), h.lm(), tmp.data());
        bool e1 = ring_->compare(tmp.data(), p.lcm.data()) == 0;
        ring_->lcm(basis_[p.j].p.lm(), h.lm(), tmp.data());
        bool e2 = ring_->compare(tmp.data(), p.lcm.data()) == 0;
        if (!e1 && !e2) continue;
      }
      old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (auto& e : basis_)
      if (e.active && ring_->divides(h.lm(), e.p.lm())) e.active = false;
    std::uint64_t mask = ring_->divmask(h.lm());
    basis_.push_back(Elem{std::move(h), sugar, mask, true});
  }

  GroebnerBasis<K> finish() {
    GroebnerBasis<K> gb;
    gb.ring = ring_;
    if (basis_.empty()) return gb;
    if (unit_found_) {
      for (auto& e : basis_)
        if (e.p.is_constant()) {
          gb.polys.push_back(Poly<K>::constant(ring_, e.p.lc().one_like()));
          return gb;
        }
    }
    std::vector<Poly<K>> minimal;
    std::vector<const Elem*> order;
    for (const auto& e : basis_) order.push_back(&e);
    std::sort(order.begin(), order.end(),
              [&](const Elem* a, const Elem* b) { return ring_->compare(a->p.lm(), b->p.lm()) < 0; });
    for (const Elem* e : order) {
      bool redundant = false;
      for (const auto& m : minimal)
        if (ring_->divides(m.lm(), e->p.lm())) {
          redundant = true;
          break;
        }
      if (!redundant) minimal.push_back(e->p);
    }
    // Interreduce tails against the minimal basis.
    basis_.clear();
    for (const auto& m : minimal) basis_.push_back(Elem{m, 0, ring_->divmask(m.lm()), true});
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Elem self = std::move(basis_[k]);
      basis_[k].p = Poly<K>(ring_);
      basis_[k].mask = ~std::uint64_t{0};
      Poly<K> tail(ring_);
      tail.reserve(self.p.size());
      for (std::size_t t = 1; t < self.p.size(); ++t) tail.push_back(self.p.coeff(t), self.p.mono(t));
      Poly<K> red = reduce_excluding(tail, k);
      Poly<K> lead(ring_);
      lead.push_back(self.p.coeff(0), self.p.mono(0));
      self.p = (lead + red).monic();
      basis_[k] = std::move(self);
    }
    for (auto& e : basis_) gb.polys.push_back(std::move(e.p));
    return gb;
  }

  Poly<K> reduce_excluding(const Poly<K>& f, std::size_t skip) {
    detail::Geobucket<K> h(ring_);
    h.add(f);
    Poly<K> res(ring_);
    K c;
    std::vector<Exponent> lm, m(ring_->stride());
    while (h.pop_lead(c, lm)) {
      const Elem* g = nullptr;
      std::uint64_t mask = ring_->divmask(lm.data());
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if (k == skip) continue;
        const auto& e = basis_[k];
        if ((e.mask & ~mask) != 0 || !ring_->divides(e.p.lm(), lm.data())) continue;
        g = &e;
        break;
      }
      if (!g) {
        res.push_back(c, lm.data());
        continue;
      }
      tick();
      ring_->div(lm.data(), g->p.lm(), m.data());
      h.add(detail::mul_tail(g->p, -c, m.data()));
    }
    return res;
  }

  RingPtr ring_;
  GroebnerOptions opt_;
  std::vector<Elem> basis_;
  std::vector<Pair> pairs_;
  std::size_t steps_ = 0;
  bool unit_found_ = false;
};

/// Reduced Groebner basis of the ideal generated by `gens` under the ring's order.
template <class K>
GroebnerBasis<K> groebner(const RingPtr& ring, std::vector<Poly<K>> gens, const GroebnerOptions& opt = {}) {
  Buchberger<K> bb(ring, opt);
  return bb.compute(std::move(gens));
}

template <class K>
GroebnerBasis<K> groebner(std::vector<Poly<K>> gens, const GroebnerOptions& opt = {}) {
  if (gens.empty()) throw std::invalid_argument("groebner: empty generator list");
  RingPtr ring = gens.front().ring();
  return groebner(ring, std::move(gens), opt);
}

/// Unique remainder of p modulo a Groebner basis.
template <class K>
Poly<K> normal_form(const Poly<K>& p, const GroebnerBasis<K>& gb) {
  if (p.is_zero()) return p;
  const Ring& R = *gb.ring;
  std::vector<std::uint64_t> masks;
  masks.reserve(gb.polys.size());
  for (const auto& g : gb.polys) masks.push_back(R.divmask(g.lm()));
  detail::Geobucket<K> h(gb.ring);
  h.add(p);
  Poly<K> res(gb.ring);
  K c;
  std::vector<Exponent> lm, m(R.stride());
  while (h.pop_lead(c, lm)) {
    std::uint64_t mask = R.divmask(lm.data());
    const Poly<K>* g = nullptr;
    for (std::size_t k = 0; k < gb.polys.size(); ++k) {
      if ((masks[k] & ~mask) != 0 || !R.divides(gb.polys[k].lm(), lm.data())) continue;
      g = &gb.polys[k];
      break;
    }
    if (!g) {
      res.push_back(c, lm.data());
      continue;
    }
    R.div(lm.data(), g->lm(), m.data());
    h.add(detail::mul_tail(*g, -(c / g->lc()), m.data()));
  }
  return res;
}

template <class K>
bool ideal_contains(const GroebnerBasis<K>& gb, const Poly<K>& p) {
  return normal_form(p, gb).is_zero();
}

/// True if every variable has a pure power as some leading monomial.
template <class K>
bool is_zero_dimensional(const GroebnerBasis<K>& gb) {
  const Ring& R = *gb.ring;
  if (gb.polys.empty()) return R.nvars() == 0;
  if (gb.is_unit()) return true;
  std::vector<bool> has(R.nvars(), false);
  for (const auto& g : gb.polys) {
    std::size_t nz = 0, which = 0;
    for (std::size_t v = 0; v < R.nvars(); ++v)
      if (R.exp(g.lm(), v)) {
        ++nz;
        which = v;
      }
    if (nz == 1) has[which] = true;
  }
  return std::all_of(has.begin(), has.end(), [](bool b) { return b; });
}

/// Number of standard monomials of a zero-dimensional basis (dimension of
/// the quotient algebra); nullopt when not zero-dimensional or above `cap`.
template <class K>
std::optional<std::size_t> quotient_dimension(const GroebnerBasis<K>& gb, std::size_t cap = 1'000'000) {
  if (!is_zero_dimensional(gb)) return std::nullopt;
  if (gb.is_unit()) return 0;
  const Ring& R = *gb.ring;
  std::vector<Exponent> m = R.one();
  std::size_t count = 0;
  bool overflow = false;
  auto divisible = [&](const std::vector<Exponent>& mono) {
    for (const auto& g : gb.polys)
      if (R.divides(g.lm(), mono.data())) return true;
    return false;
  };
  // depth-first over variables; multiples of a leading monomial are pruned
  auto rec = [&](auto&& self, std::size_t v) -> void {
    if (overflow) return;
    if (v == R.nvars()) {
      if (++count > cap) overflow = true;
      return;
    }
    const std::size_t slot = R.nblocks() + v;
    Exponent saved = m[slot];
    for (;;) {
      R.finish(m.data());
      if (divisible(m)) break;
      self(self, v + 1);
      if (overflow) break;
      m[slot] = static_cast<Exponent>(m[slot] + 1);
    }
    m[slot] = saved;
    R.finish(m.data());
  };
  rec(rec, 0);
  if (overflow) return std::nullopt;
  return count;
}

/// Finite(k) with k = quotient dimension (solutions with multiplicity), or Infinite.
struct SolutionCount {
  bool finite = false;
  std::size_t count = 0;
  static SolutionCount infinite() { return {}; }
  static SolutionCount finite_count(std::size_t k) { return {true, k}; }
  bool operator==(const SolutionCount& o) const { return finite == o.finite && (!finite || count == o.count); }
};

template <class K>
SolutionCount solution_count(const GroebnerBasis<K>& gb) {
  auto d = quotient_dimension(gb);
  if (!d) return SolutionCount::infinite();
  return SolutionCount::finite_count(*d);
}

/// Monic polynomial c0 + c1 t + ... + t^d of least degree with p(elem) in the
/// ideal, found by Krylov iteration on normal forms of elem^k. Works for
/// positive-dimensional ideals when such a polynomial exists; nullopt when
/// none exists up to `max_degree`.
template <class K>
std::optional<std::vector<K>> minimal_polynomial_of(const Poly<K>& elem, const GroebnerBasis<K>& gb,
                                                    unsigned max_degree = 64, const Interrupt* interrupt = nullptr) {
  const Ring& R = *gb.ring;
  if (gb.is_unit()) return std::nullopt;
  if (gb.polys.empty() && elem.is_zero()) throw std::invalid_argument("minimal polynomial of zero in the zero ideal");
  K one = (gb.polys.empty() ? elem : gb.polys.front()).lc().one_like();
  K zero = one.zero_like();
  if (elem.is_zero()) return std::vector<K>{zero, one};
  auto cmp = [&R](const std::vector<Exponent>& a, const std::vector<Exponent>& b) {
    return R.compare(a.data(), b.data()) < 0;
  };
  struct Row {
    Poly<K> vec;
    std::vector<K> combo;
  };
  std::vector<Row> rows;
  std::map<std::vector<Exponent>, std::size_t, decltype(cmp)> pivot(cmp);
  Poly<K> power = normal_form(Poly<K>::constant(gb.ring, one), gb);
  for (unsigned k = 0; k <= max_degree; ++k) {
    if (interrupt) interrupt->poll();
    Poly<K> v = power;
    std::vector<K> combo(k + 1, zero);
    combo[k] = one;
    bool changed = true;
    while (changed && !v.is_zero()) {
      changed = false;
      for (std::size_t t = 0; t < v.size(); ++t) {
        auto it = pivot.find(v.mono_vec(t));
        if (it == pivot.end()) continue;
        const Row& r = rows[it->second];
        K c = v.coeff(t) / r.vec.lc();
        v = v - r.vec.scaled(c);
        for (std::size_t q = 0; q < r.combo.size(); ++q) combo[q] -= c * r.combo[q];
        changed = true;
        break;
      }
    }
    if (v.is_zero()) return combo;  // combo[k] == 1
    pivot.emplace(v.mono_vec(0), rows.size());
    rows.push_back(Row{std::move(v), std::move(combo)});
    for (auto& r : rows) r.combo.resize(k + 2, zero);
    power = normal_form(power * elem, gb);
  }
  return std::nullopt;
}

/// Least-degree monic univariate polynomial in `var` lying in the ideal.
template <class K>
Poly<K> minimal_polynomial(std::size_t var, const GroebnerBasis<K>& gb) {
  if (!is_zero_dimensional(gb) || gb.is_unit()) throw NotZeroDimensional();
  K one = gb.polys.front().lc().one_like();
  auto x = Poly<K>::variable(gb.ring, var, one);
  auto mp = minimal_polynomial_of(x, gb, 1u << 16);
  if (!mp) throw NotZeroDimensional();
  Poly<K> out(gb.ring);
  for (std::size_t k = mp->size(); k-- > 0;) {
    if ((*mp)[k].is_zero()) continue;
    out.push_back((*mp)[k], gb.ring->variable(var, static_cast<Exponent>(k)).data());
  }
  return out;
}

// ---- dense univariate helpers (coefficients low to high) ----

template <class K>
void trim(std::vector<K>& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

template <class K>
std::vector<K> uni_rem(std::vector<K> a, const std::vector<K>& b) {
  trim(a);
  K inv = b.back().inv();
  while (a.size() >= b.size()) {
    K c = a.back() * inv;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

template <class K>
std::vector<K> uni_gcd(std::vector<K> a, std::vector<K> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    K inv = a.back().inv();
    for (auto& c : a) c *= inv;
  }
  return a;
}

template <class K>
std::vector<K> uni_derivative(const std::vector<K>& a) {
  std::vector<K> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i].mul_int(static_cast<std::int64_t>(i)));
  trim(d);
  return d;
}

/// Number of distinct roots (over the algebraic closure) of a nonzero
/// polynomial in characteristic zero or large characteristic.
template <class K>
std::size_t distinct_root_count(std::vector<K> a) {
  trim(a);
  if (a.size() <= 1) return 0;
  auto g = uni_gcd(a, uni_derivative(a));
  return (a.size() - 1) - (g.empty() ? 0 : g.size() - 1);
}

}  // namespace sia::algebra
