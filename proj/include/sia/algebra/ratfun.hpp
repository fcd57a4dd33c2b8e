#pragma once

#include <string>

#include "sia/algebra/gcd.hpp"
#include "sia/algebra/poly.hpp"

namespace sia::algebra {

/// Rational function num/den over Q in the variables of one ring.
/// Canonical form: gcd(num, den) = 1 and den has leading coefficient 1, so
/// equal functions have equal representations. Usable as the coefficient
/// field K of Poly<K>.
class RatFun {
 public:
  RatFun() = default;
  explicit RatFun(const QPoly& num);
  RatFun(const QPoly& num, const QPoly& den);
  static RatFun constant(const RingPtr& ring, const Rational& c) { return RatFun(q_const(ring, c)); }
  static RatFun variable(const RingPtr& ring, std::size_t v) { return RatFun(q_var(ring, v)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a constant function.
  Rational constant_value() const;

  RatFun zero_like() const { return RatFun(QPoly(ring())); }
  RatFun one_like() const { return constant(ring(), Rational(1)); }
  RatFun inv() const;
  RatFun mul_int(std::int64_t k) const;
  RatFun pow(unsigned e) const;

  RatFun operator-() const;
  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const { return *this * o.inv(); }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

  bool operator==(const RatFun& o) const;
  bool operator!=(const RatFun& o) const { return !(*this == o); }

  /// Partial derivative.
  RatFun derivative(std::size_t var) const;
  /// Same function in another ring with the same variable names in any order.
  RatFun in_ring(const RingPtr& target, const std::vector<std::size_t>& var_map) const;

  /// Grammar-conformant rendering with integer coefficients where possible,
  /// e.g. "k5/k7", "b*d + a", "(k3*k5 - k2*k4)/(k2 + k3)".
  std::string str() const;

 private:
  void normalize();
  QPoly num_, den_;
};

}  // namespace sia::algebra
