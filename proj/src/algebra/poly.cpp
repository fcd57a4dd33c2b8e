#include "sia/algebra/poly.hpp"
#include "sia/algebra/ratfun.hpp"

namespace sia::algebra {

namespace {

void append_monomial(std::ostringstream& os, const Ring& r, const Exponent* m) {
  bool first = true;
  for (std::size_t v = 0; v < r.nvars(); ++v) {
    Exponent e = r.exp(m, v);
    if (!e) continue;
    if (!first) os << "*";
    first = false;
    os << r.name(v);
    if (e > 1) os << "^" << e;
  }
}

// Sign and magnitude of a coefficient for display.
std::pair<bool, std::string> split_sign(const Rational& c) {
  if (c.sign() < 0) return {true, (-c).str()};
  return {false, c.str()};
}
std::pair<bool, std::string> split_sign(const Zp& c) { return {false, c.str()}; }
std::pair<bool, std::string> split_sign(const RatFun& c) {
  bool neg = c.num().size() == 1 && c.num().lc().sign() < 0;
  std::string s = (neg ? -c : c).str();
  if (s.find(' ') != std::string::npos && s.front() != '(') s = "(" + s + ")";
  else if (s.find(' ') != std::string::npos && s.find(")/") != std::string::npos) s = "(" + s + ")";
  return {neg, s};
}

}  // namespace

template <class K>
std::string to_string(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  const Ring& r = *p.ring();
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto [neg, mag] = split_sign(p.coeff(i));
    if (i == 0) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    bool is_unit_mono = r.total_degree(p.mono(i)) == 0;
    if (is_unit_mono) {
      os << mag;
      continue;
    }
    if (mag != "1") os << mag << "*";
    append_monomial(os, r, p.mono(i));
  }
  return os.str();
}

template std::string to_string(const Poly<Rational>&);
template std::string to_string(const Poly<Zp>&);
template std::string to_string(const Poly<RatFun>&);

}  // namespace sia::algebra
