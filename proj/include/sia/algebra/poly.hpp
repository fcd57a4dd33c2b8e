#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sia/algebra/field.hpp"
#include "sia/algebra/ring.hpp"

namespace sia::algebra {

struct DivisionNotExact : std::domain_error {
  DivisionNotExact() : std::domain_error("polynomial division is not exact") {}
};

/// Sparse multivariate polynomial over a coefficient field K.
///
/// Terms are kept strictly decreasing in the ring's term order with no zero
/// coefficients, so the leading term is always at index 0. K is any of
/// Rational, Zp or RatFun; the interface K must provide is the one of
/// Rational (arithmetic, is_zero, is_one, zero_like, one_like, inv, mul_int).
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly constant(RingPtr ring, const K& c) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.push_back(c, p.ring_->one().data());
    return p;
  }
  static Poly variable(RingPtr ring, std::size_t var, const K& one) {
    Poly p(std::move(ring));
    auto m = p.ring_->variable(var);
    p.push_back(one, m.data());
    return p;
  }
  static Poly monomial(RingPtr ring, const K& c, const std::vector<Exponent>& mono) {
    Poly p(std::move(ring));
    if (!c.is_zero()) p.push_back(c, mono.data());
    return p;
  }
  /// Builds from unsorted (coefficient, stride monomial) terms; like terms are combined.
  static Poly from_terms(RingPtr ring, std::vector<std::pair<K, std::vector<Exponent>>> terms) {
    Poly p(std::move(ring));
    const Ring& r = *p.ring_;
    std::sort(terms.begin(), terms.end(),
              [&](const auto& a, const auto& b) { return r.compare(a.second.data(), b.second.data()) > 0; });
    for (std::size_t i = 0; i < terms.size();) {
      K c = terms[i].first;
      std::size_t j = i + 1;
      while (j < terms.size() && r.compare(terms[j].second.data(), terms[i].second.data()) == 0) {
        c += terms[j].first;
        ++j;
      }
      if (!c.is_zero()) p.push_back(c, terms[i].second.data());
      i = j;
    }
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return is_zero() || (size() == 1 && ring_->total_degree(mono(0)) == 0); }
  bool is_one() const { return is_constant() && !is_zero() && coeffs_[0].is_one(); }

  const K& coeff(std::size_t i) const { return coeffs_[i]; }
  K& coeff_mut(std::size_t i) { return coeffs_[i]; }
  const Exponent* mono(std::size_t i) const { return exps_.data() + i * ring_->stride(); }
  std::vector<Exponent> mono_vec(std::size_t i) const {
    return std::vector<Exponent>(mono(i), mono(i) + ring_->stride());
  }
  Exponent exp(std::size_t i, std::size_t var) const { return ring_->exp(mono(i), var); }

  const K& lc() const { return coeffs_.front(); }
  const Exponent* lm() const { return exps_.data(); }

  /// Constant coefficient (zero if absent).
  K constant_term(const K& zero) const {
    if (!is_zero() && ring_->total_degree(mono(size() - 1)) == 0) return coeffs_.back();
    return zero;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (std::size_t i = 0; i < size(); ++i) d = std::max(d, ring_->total_degree(mono(i)));
    return d;
  }
  unsigned degree(std::size_t var) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < size(); ++i) d = std::max<unsigned>(d, exp(i, var));
    return d;
  }
  bool involves(std::size_t var) const { return degree(var) > 0; }
  std::vector<bool> support_vars() const {
    std::vector<bool> used(ring_->nvars(), false);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t v = 0; v < ring_->nvars(); ++v)
        if (exp(i, v)) used[v] = true;
    return used;
  }

  void push_back(const K& c, const Exponent* m) {
    coeffs_.push_back(c);
    const std::size_t s = ring_->stride(), n = exps_.size();
    exps_.resize(n + s);
    std::copy_n(m, s, exps_.data() + n);
  }
  void reserve(std::size_t n) {
    coeffs_.reserve(n);
    exps_.reserve(n * ring_->stride());
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Poly operator+(const Poly& o) const { return merge(o, false); }
  Poly operator-(const Poly& o) const { return merge(o, true); }
  Poly& operator+=(const Poly& o) { return *this = merge(o, false); }
  Poly& operator-=(const Poly& o) { return *this = merge(o, true); }

  Poly scaled(const K& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  /// this * c * m for a stride monomial m.
  Poly mul_term(const K& c, const Exponent* m) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    r.reserve(size());
    std::vector<Exponent> tmp(ring_->stride());
    for (std::size_t i = 0; i < size(); ++i) {
      ring_->mul(mono(i), m, tmp.data());
      r.push_back(coeffs_[i] * c, tmp.data());
    }
    return r;
  }

  Poly operator*(const Poly& o) const {
    check_ring(o);
    if (is_zero() || o.is_zero()) return Poly(ring_);
    if (size() < o.size()) return o * *this;
    // Accumulate one shifted copy of *this per term of o; merging pairwise
    // keeps the work close to n*m*log(m).
    std::vector<Poly> parts;
    parts.reserve(o.size());
    for (std::size_t j = 0; j < o.size(); ++j) parts.push_back(mul_term(o.coeffs_[j], o.mono(j)));
    while (parts.size() > 1) {
      std::vector<Poly> next;
      next.reserve((parts.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
      if (parts.size() % 2) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    return std::move(parts.front());
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly result = Poly::constant(ring_, one_coeff());
    Poly base = *this;
    while (e) {
      if (e & 1u) result = result * base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }

  /// Formal partial derivative.
  Poly derivative(std::size_t var) const {
    std::vector<std::pair<K, std::vector<Exponent>>> terms;
    for (std::size_t i = 0; i < size(); ++i) {
      Exponent e = exp(i, var);
      if (!e) continue;
      auto m = mono_vec(i);
      m[ring_->nblocks() + var] = static_cast<Exponent>(e - 1);
      ring_->finish(m.data());
      terms.emplace_back(coeffs_[i].mul_int(e), std::move(m));
    }
    // lowering an exponent can change the relative order of terms
    return from_terms(ring_, std::move(terms));
  }

  /// Exact quotient this / d; throws DivisionNotExact otherwise.
  Poly divide_exact(const Poly& d) const {
    check_ring(d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Poly rem = *this;
    std::vector<std::pair<K, std::vector<Exponent>>> q;
    std::vector<Exponent> tmp(ring_->stride());
    const K dinv = d.lc().inv();
    while (!rem.is_zero()) {
      if (!ring_->divides(d.lm(), rem.lm())) throw DivisionNotExact();
      ring_->div(rem.lm(), d.lm(), tmp.data());
      K c = rem.lc() * dinv;
      q.emplace_back(c, tmp);
      rem = rem - d.mul_term(c, tmp.data());
    }
    return from_terms(ring_, std::move(q));
  }

  /// Leading coefficient made one.
  Poly monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scaled(lc().inv());
  }

  /// Re-expresses this polynomial in another ring; `var_map[i]` is the
  /// index in `target` of variable i (every used variable must map).
  Poly in_ring(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
    std::vector<std::pair<K, std::vector<Exponent>>> terms;
    terms.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      std::vector<Exponent> m(target->stride(), 0);
      for (std::size_t v = 0; v < ring_->nvars(); ++v) {
        Exponent e = exp(i, v);
        if (!e) continue;
        if (var_map[v] >= target->nvars()) throw std::invalid_argument("variable has no image in target ring");
        m[target->nblocks() + var_map[v]] = static_cast<Exponent>(m[target->nblocks() + var_map[v]] + e);
      }
      target->finish(m.data());
      terms.emplace_back(coeffs_[i], std::move(m));
    }
    return from_terms(target, std::move(terms));
  }
  /// Same variables, different ring object (e.g. another term order).
  Poly in_ring(const RingPtr& target) const {
    std::vector<std::size_t> id(ring_->nvars());
    std::iota(id.begin(), id.end(), 0);
    return in_ring(target, id);
  }

  /// Applies f to every coefficient (e.g. Rational -> Zp). Zero images are dropped.
  template <class F>
  auto map_coeffs(F&& f) const -> Poly<decltype(f(std::declval<const K&>()))> {
    using K2 = decltype(f(std::declval<const K&>()));
    Poly<K2> r(ring_);
    r.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      K2 c = f(coeffs_[i]);
      if (!c.is_zero()) r.push_back(c, mono(i));
    }
    return r;
  }

  bool operator==(const Poly& o) const {
    if (size() != o.size()) return false;
    if (size() == 0) return true;
    if (!ring_->same_as(*o.ring_)) return false;
    for (std::size_t i = 0; i < size(); ++i)
      if (coeffs_[i] != o.coeffs_[i]) return false;
    return exps_ == o.exps_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  K one_coeff() const;

 private:
  void check_ring(const Poly& o) const {
    if (ring_ && o.ring_ && ring_ != o.ring_ && !ring_->same_as(*o.ring_))
      throw std::invalid_argument("polynomials live in different rings");
  }

  Poly merge(const Poly& o, bool subtract) const {
    if (!ring_) return subtract ? -o : o;
    check_ring(o);
    Poly r(ring_);
    r.reserve(size() + o.size());
    const Ring& R = *ring_;
    std::size_t i = 0, j = 0;
    while (i < size() && j < o.size()) {
      int c = R.compare(mono(i), o.mono(j));
      if (c > 0) {
        r.push_back(coeffs_[i], mono(i));
        ++i;
      } else if (c < 0) {
        r.push_back(subtract ? -o.coeffs_[j] : o.coeffs_[j], o.mono(j));
        ++j;
      } else {
        K s = subtract ? coeffs_[i] - o.coeffs_[j] : coeffs_[i] + o.coeffs_[j];
        if (!s.is_zero()) r.push_back(s, mono(i));
        ++i;
        ++j;
      }
    }
    for (; i < size(); ++i) r.push_back(coeffs_[i], mono(i));
    for (; j < o.size(); ++j) r.push_back(subtract ? -o.coeffs_[j] : o.coeffs_[j], o.mono(j));
    return r;
  }

  RingPtr ring_;
  std::vector<K> coeffs_;
  std::vector<Exponent> exps_;
};

template <class K>
K Poly<K>::one_coeff() const {
  if (is_zero()) throw std::logic_error("one_coeff() of zero polynomial has no field context");
  return coeffs_.front().one_like();
}

using QPoly = Poly<Rational>;
using ZpPoly = Poly<Zp>;

inline QPoly q_const(const RingPtr& r, const Rational& c) { return QPoly::constant(r, c); }
inline QPoly q_var(const RingPtr& r, std::size_t v) { return QPoly::variable(r, v, Rational(1)); }

/// Reduces a rational polynomial modulo p; throws std::domain_error on a bad prime.
inline ZpPoly reduce_mod(const QPoly& p, std::uint32_t prime) {
  return p.map_coeffs([prime](const Rational& c) { return Zp::from_rational(c, prime); });
}

/// Evaluates at a full point (one value per ring variable).
template <class K>
K evaluate(const Poly<K>& p, const std::vector<K>& point, const K& zero) {
  const Ring& R = *p.ring();
  K acc = zero;
  for (std::size_t i = 0; i < p.size(); ++i) {
    K t = p.coeff(i);
    for (std::size_t v = 0; v < R.nvars(); ++v) {
      Exponent e = p.exp(i, v);
      for (Exponent k = 0; k < e; ++k) t *= point[v];
    }
    acc += t;
  }
  return acc;
}

/// Replaces variable `var` by the polynomial `value` (same ring).
template <class K>
Poly<K> substitute(const Poly<K>& p, std::size_t var, const Poly<K>& value) {
  if (!p.involves(var)) return p;
  const Ring& R = *p.ring();
  unsigned dmax = p.degree(var);
  std::vector<Poly<K>> powers;
  powers.reserve(dmax + 1);
  powers.push_back(Poly<K>::constant(p.ring(), p.one_coeff()));
  for (unsigned k = 1; k <= dmax; ++k) powers.push_back(powers.back() * value);
  // Group terms by exponent of var.
  std::vector<std::vector<std::pair<K, std::vector<Exponent>>>> groups(dmax + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto m = p.mono_vec(i);
    Exponent e = m[R.nblocks() + var];
    m[R.nblocks() + var] = 0;
    R.finish(m.data());
    groups[e].emplace_back(p.coeff(i), std::move(m));
  }
  Poly<K> acc(p.ring());
  for (unsigned k = 0; k <= dmax; ++k) {
    if (groups[k].empty()) continue;
    auto part = Poly<K>::from_terms(p.ring(), std::move(groups[k]));
    acc += k == 0 ? part : part * powers[k];
  }
  return acc;
}

/// Replaces every variable i with known[i] (when set) by a constant.
template <class K>
Poly<K> specialize(const Poly<K>& p, const std::vector<std::optional<K>>& known) {
  const Ring& R = *p.ring();
  std::vector<std::pair<K, std::vector<Exponent>>> terms;
  terms.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    K c = p.coeff(i);
    auto m = p.mono_vec(i);
    for (std::size_t v = 0; v < R.nvars(); ++v) {
      if (!known[v]) continue;
      Exponent e = m[R.nblocks() + v];
      for (Exponent k = 0; k < e; ++k) c *= *known[v];
      m[R.nblocks() + v] = 0;
    }
    if (c.is_zero()) continue;
    R.finish(m.data());
    terms.emplace_back(c, std::move(m));
  }
  return Poly<K>::from_terms(p.ring(), std::move(terms));
}

/// Grammar-conformant rendering ("3*x^2*y - 1/2*z + 1").
template <class K>
std::string to_string(const Poly<K>& p);

extern template std::string to_string(const Poly<Rational>&);
extern template std::string to_string(const Poly<Zp>&);

class RatFun;
extern template std::string to_string(const Poly<RatFun>&);

}  // namespace sia::algebra
