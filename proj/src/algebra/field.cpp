#include "sia/algebra/field.hpp"

#include <cctype>

namespace sia::algebra {

Rational Rational::parse(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    return Rational(q);
  }
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac = text.size() - dot - 1;
  for (char ch : digits)
    if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '+')
      throw std::invalid_argument("bad decimal literal: " + text);
  if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad decimal literal: " + text);
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
  return Rational(mpq_class(num, den));
}

Zp Zp::from_rational(const Rational& q, std::uint32_t p) {
  mpz_class n = q.num() % p;
  mpz_class d = q.den() % p;
  if (n < 0) n += p;
  if (d == 0) throw std::domain_error("prime divides a denominator");
  Zp zn(n.get_ui(), p);
  Zp zd(d.get_ui(), p);
  return zn / zd;
}

Zp Zp::pow(std::uint64_t e) const {
  Zp base = *this;
  Zp acc = one_like();
  while (e) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Zp Zp::inv() const {
  if (v_ == 0) throw std::domain_error("division by zero in GF(p)");
  std::int64_t a = v_, m = p_, x0 = 1, x1 = 0;
  while (m) {
    std::int64_t q = a / m;
    std::int64_t t = a - q * m;
    a = m;
    m = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (x0 < 0) x0 += p_;
  return Zp(static_cast<std::uint64_t>(x0), p_);
}

}  // namespace sia::algebra
