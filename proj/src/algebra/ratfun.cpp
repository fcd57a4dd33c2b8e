#include "sia/algebra/ratfun.hpp"

#include <stdexcept>

namespace sia::algebra {

namespace {

const RingPtr& pick_ring(const RatFun& a, const RatFun& b) { return a.ring() ? a.ring() : b.ring(); }

QPoly one_of(const RingPtr& r) { return q_const(r, Rational(1)); }

// The default RatFun has no ring; it acts as zero.
RatFun lift(const RatFun& a, const RingPtr& r) { return a.ring() ? a : RatFun(QPoly(r)); }

}  // namespace

RatFun::RatFun(const QPoly& num) : num_(num), den_(one_of(num.ring())) {}

RatFun::RatFun(const QPoly& num, const QPoly& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  normalize();
}

void RatFun::normalize() {
  if (num_.is_zero()) {
    den_ = one_of(num_.ring() ? num_.ring() : den_.ring());
    if (!num_.ring()) num_ = QPoly(den_.ring());
    return;
  }
  if (!den_.is_constant()) {
    QPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = num_.divide_exact(g);
      den_ = den_.divide_exact(g);
    }
  }
  Rational l = den_.lc();
  if (!l.is_one()) {
    Rational li = l.inv();
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

Rational RatFun::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  if (num_.is_zero()) return Rational(0);
  return num_.lc() / den_.lc();
}

RatFun RatFun::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  RatFun r;
  r.num_ = den_;
  r.den_ = num_;
  Rational l = r.den_.lc();
  if (!l.is_one()) {
    r.num_ = r.num_.scaled(l.inv());
    r.den_ = r.den_.scaled(l.inv());
  }
  return r;
}

RatFun RatFun::mul_int(std::int64_t k) const {
  RatFun r = *this;
  if (k == 0) return zero_like();
  r.num_ = r.num_.scaled(Rational(static_cast<long>(k)));
  return r;
}

RatFun RatFun::pow(unsigned e) const {
  RatFun r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
  if (o.is_zero()) return lift(*this, pick_ring(*this, o));
  if (is_zero()) return lift(o, pick_ring(*this, o));
  RatFun r;
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    if (den_.is_one() || r.num_.is_zero()) {
      if (r.num_.is_zero()) r.den_ = one_of(ring());
      return r;
    }
    r.normalize();
    return r;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    r.num_ = num_.scaled(den_.lc().inv()) + o.num_.scaled(o.den_.lc().inv());
    r.den_ = one_of(ring());
    return r;
  }
  QPoly g = gcd(den_, o.den_);
  QPoly d1 = den_.divide_exact(g), d2 = o.den_.divide_exact(g);
  r.num_ = num_ * d2 + o.num_ * d1;
  r.den_ = den_ * d2;
  r.normalize();
  return r;
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
  if (is_zero()) return lift(*this, pick_ring(*this, o));
  if (o.is_zero()) return lift(o, pick_ring(*this, o));
  RatFun r;
  if (den_.is_one() && o.den_.is_one()) {
    r.num_ = num_ * o.num_;
    r.den_ = den_;
    return r;
  }
  QPoly a = num_, b = den_, c = o.num_, d = o.den_;
  if (!d.is_constant()) {
    QPoly g = gcd(a, d);
    if (!g.is_constant()) {
      a = a.divide_exact(g);
      d = d.divide_exact(g);
    }
  }
  if (!b.is_constant()) {
    QPoly g = gcd(c, b);
    if (!g.is_constant()) {
      c = c.divide_exact(g);
      b = b.divide_exact(g);
    }
  }
  r.num_ = a * c;
  r.den_ = b * d;
  Rational l = r.den_.lc();
  if (!l.is_one()) {
    r.num_ = r.num_.scaled(l.inv());
    r.den_ = r.den_.scaled(l.inv());
  }
  return r;
}

bool RatFun::operator==(const RatFun& o) const {
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  return num_ == o.num_ && den_ == o.den_;
}

RatFun RatFun::derivative(std::size_t var) const {
  if (den_.is_constant()) {
    RatFun r;
    r.num_ = num_.derivative(var);
    r.den_ = den_;
    if (r.num_.is_zero()) r = zero_like();
    return r;
  }
  return RatFun(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFun RatFun::in_ring(const RingPtr& target, const std::vector<std::size_t>& var_map) const {
  if (!ring()) return RatFun(QPoly(target));
  RatFun r;
  r.num_ = num_.in_ring(target, var_map);
  r.den_ = den_.in_ring(target, var_map);
  if (r.num_.is_zero()) return RatFun(QPoly(target));
  Rational l = r.den_.lc();
  if (!l.is_one()) {
    r.num_ = r.num_.scaled(l.inv());
    r.den_ = r.den_.scaled(l.inv());
  }
  return r;
}

std::string RatFun::str() const {
  if (is_zero()) return "0";
  if (den_.is_constant()) return to_string(num_.scaled(den_.lc().inv()));
  // scale so that both parts have coprime integer coefficients
  Rational cn = rational_content(num_), cd = rational_content(den_);
  QPoly n = num_.scaled(cn.inv()), d = den_.scaled(cd.inv());
  Rational k = cn / cd;
  // k = p/q: fold p into the numerator, q into the denominator
  QPoly nn = n.scaled(Rational(mpq_class(k.num())));
  QPoly dd = d.scaled(Rational(mpq_class(k.den())));
  std::string ns = to_string(nn);
  if (nn.size() > 1) ns = "(" + ns + ")";
  std::string ds = to_string(dd);
  bool atom = dd.size() == 1 && dd.lc().is_one() && ds.find('*') == std::string::npos;
  if (!atom) ds = "(" + ds + ")";
  return ns + "/" + ds;
}

}  // namespace sia::algebra
