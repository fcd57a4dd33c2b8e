#include "sia/algebra/parse.hpp"

#include <cctype>

namespace sia::algebra {

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& s) : ring_(ring), s_(s) {}

  QPoly run() {
    QPoly p = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw PolyParseError(msg + " at offset " + std::to_string(i_));
  }

  QPoly sum() {
    QPoly acc(ring_);
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('-')) neg = true;
      else if (!first && !eat('+')) break;
      else if (first) eat('+');
      QPoly t = product();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
    }
    return acc;
  }

  QPoly product() {
    QPoly acc = power();
    while (eat('*')) acc = acc * power();
    return acc;
  }

  QPoly power() {
    QPoly b = atom();
    if (eat('^')) {
      skip();
      std::size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (st == i_) fail("expected a non-negative integer exponent");
      b = b.pow(static_cast<unsigned>(std::stoul(s_.substr(st, i_ - st))));
    }
    return b;
  }

  QPoly atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      QPoly p = sum();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++i_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) ++i_;
      return q_const(ring_, Rational::parse(s_.substr(st, i_ - st)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t st = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(st, i_ - st);
      auto v = ring_->index_of(name);
      if (!v) fail("unknown variable '" + name + "'");
      return q_var(ring_, *v);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const RingPtr& ring_;
  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace

QPoly parse_poly(const RingPtr& ring, const std::string& text) { return Parser(ring, text).run(); }

}  // namespace sia::algebra
