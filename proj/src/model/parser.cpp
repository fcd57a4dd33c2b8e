#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include "sia/model/model.hpp"

namespace sia::model {

using algebra::QPoly;
using algebra::Rational;

namespace {

const std::set<std::string> kTranscendental = {"sin",  "cos",  "tan",   "exp",  "log",  "ln",   "sqrt",
                                               "sinh", "cosh", "tanh",  "asin", "acos", "atan", "arcsin",
                                               "arccos", "arctan", "abs", "sec", "csc", "cot", "log10", "pow"};

struct Token {
  enum class Kind { Ident, Number, Op, End };
  Kind kind;
  std::string text;
  SourceLoc loc;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  SourceLoc loc;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++loc.line;
        loc.column = 1;
      } else {
        ++loc.column;
      }
      loc.offset = i + 1;
    }
  };
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    SourceLoc at = loc;
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), at});
      advance(j - i);
      continue;
    }
    if (std::isdigit(c) || (c == '.' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') {
        ++j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
        if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
          while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
          j = k;
        }
      }
      out.push_back({Token::Kind::Number, s.substr(i, j - i), at});
      advance(j - i);
      continue;
    }
    if (c == '*' && i + 1 < s.size() && s[i + 1] == '*') {
      out.push_back({Token::Kind::Op, "^", at});
      advance(2);
      continue;
    }
    if (std::string("+-*/^(),=;").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Kind::Op, std::string(1, static_cast<char>(c)), at});
      advance(1);
      continue;
    }
    std::string shown = c < 0x80 ? std::string(1, static_cast<char>(c)) : "non-ASCII byte";
    throw ModelError("SyntaxError", "unexpected character '" + shown + "'", at);
  }
  out.push_back({Token::Kind::End, "", loc});
  return out;
}

Rational number_value(const std::string& text, SourceLoc loc) {
  std::string mant = text;
  long e10 = 0;
  auto e = text.find_first_of("eE");
  if (e != std::string::npos) {
    mant = text.substr(0, e);
    e10 = std::stol(text.substr(e + 1));
  }
  if (!mant.empty() && mant.front() == '.') mant = "0" + mant;
  if (!mant.empty() && mant.back() == '.') mant += "0";
  Rational v;
  try {
    v = Rational::parse(mant);
  } catch (const std::exception&) {
    throw ModelError("SyntaxError", "malformed number '" + text + "'", loc);
  }
  if (e10 != 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e10)));
    v = e10 > 0 ? v * Rational(mpq_class(p)) : v * Rational(mpq_class(mpz_class(1), p));
  }
  return v;
}

std::shared_ptr<Expr> node(Expr::Kind k, SourceLoc loc) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->loc = loc;
  return e;
}

class EquationParser {
 public:
  EquationParser(const std::vector<Token>& toks, Syntax syntax) : t_(toks), syntax_(syntax) {}

  std::vector<Equation> run() {
    std::vector<Equation> eqs;
    while (peek().kind != Token::Kind::End) {
      if (is_op(";")) {
        ++i_;
        continue;
      }
      eqs.push_back(equation());
      if (peek().kind == Token::Kind::End) break;
      if (!is_op(";")) fail("expected ';' between equations");
      ++i_;
    }
    return eqs;
  }

 private:
  const Token& peek(std::size_t k = 0) const { return t_[std::min(i_ + k, t_.size() - 1)]; }
  bool is_op(const char* op, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Op && peek(k).text == op;
  }
  bool is_ident(const char* name, std::size_t k = 0) const {
    return peek(k).kind == Token::Kind::Ident && peek(k).text == name;
  }
  [[noreturn]] void fail(const std::string& msg, const char* code = "SyntaxError") const {
    std::string where = peek().kind == Token::Kind::End ? "end of input" : "'" + peek().text + "'";
    throw ModelError(code, msg + " (found " + where + ")", peek().loc);
  }
  void expect(const char* op) {
    if (!is_op(op)) fail(std::string("expected '") + op + "'");
    ++i_;
  }
  std::string ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected a name");
    return t_[i_++].text;
  }
  // "(t)" following a name
  bool time_arg_follows() const { return is_op("(") && is_ident("t", 1) && is_op(")", 2); }

  Equation equation() {
    Equation eq;
    eq.loc = peek().loc;
    if (syntax_ == Syntax::MapleLike && is_ident("diff") && is_op("(", 1)) {
      i_ += 2;
      eq.lhs = ident();
      if (time_arg_follows()) i_ += 3;
      expect(",");
      std::string var = ident();
      if (var != "t")
        throw ModelError("SyntaxError", "differentiation variable must be t, got '" + var + "'", t_[i_ - 1].loc);
      expect(")");
      eq.derivative = true;
    } else if (syntax_ == Syntax::SlashD && peek().kind == Token::Kind::Ident && peek().text.size() > 1 &&
               peek().text[0] == 'd' && is_op("/", 1) && is_ident("dt", 2)) {
      eq.lhs = peek().text.substr(1);
      i_ += 3;
      eq.derivative = true;
    } else {
      eq.lhs = ident();
      if (time_arg_follows()) i_ += 3;
    }
    if (eq.lhs == "t") throw ModelError("SyntaxError", "'t' is reserved for time", eq.loc);
    expect("=");
    eq.rhs = sum();
    return eq;
  }

  ExprPtr sum() {
    ExprPtr acc = product();
    while (is_op("+") || is_op("-")) {
      auto op = node(peek().text == "+" ? Expr::Kind::Add : Expr::Kind::Sub, peek().loc);
      ++i_;
      op->args = {acc, product()};
      acc = op;
    }
    return acc;
  }

  ExprPtr product() {
    ExprPtr acc = unary();
    while (is_op("*") || is_op("/")) {
      auto op = node(peek().text == "*" ? Expr::Kind::Mul : Expr::Kind::Div, peek().loc);
      ++i_;
      op->args = {acc, unary()};
      acc = op;
    }
    return acc;
  }

  ExprPtr unary() {
    if (is_op("-") || is_op("+")) {
      if (++signs_ > 256) fail("too many consecutive signs");
    } else {
      signs_ = 0;
    }
    if (is_op("-")) {
      auto n = node(Expr::Kind::Neg, peek().loc);
      ++i_;
      n->args = {unary()};
      return n;
    }
    if (is_op("+")) {
      ++i_;
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (!is_op("^")) return base;
    SourceLoc at = peek().loc;
    ++i_;
    ExprPtr ex = is_op("-") || is_op("+") ? unary() : atom();
    if (is_op("^")) fail("ambiguous repeated '^'; use parentheses");
    auto n = node(Expr::Kind::Pow, at);
    n->exponent = integer_exponent(*ex, at);
    n->args = {base};
    return n;
  }

  static bool constant_value(const Expr& e, Rational& out) {
    switch (e.kind) {
      case Expr::Kind::Number:
        out = e.value;
        return true;
      case Expr::Kind::Neg:
        if (!constant_value(*e.args[0], out)) return false;
        out = -out;
        return true;
      case Expr::Kind::Symbol:
        return false;
      default: {
        Rational a, b;
        if (e.kind == Expr::Kind::Pow) return false;
        if (!constant_value(*e.args[0], a) || !constant_value(*e.args[1], b)) return false;
        if (e.kind == Expr::Kind::Add) out = a + b;
        else if (e.kind == Expr::Kind::Sub) out = a - b;
        else if (e.kind == Expr::Kind::Mul) out = a * b;
        else if (b.is_zero()) return false;
        else out = a / b;
        return true;
      }
    }
  }

  long integer_exponent(const Expr& e, SourceLoc at) const {
    Rational v;
    if (!constant_value(e, v)) throw ModelError("NonRationalError", "exponent must be an integer constant", at);
    if (v.den() != 1) throw ModelError("NonRationalError", "non-integer exponent " + v.str(), at);
    if (abs(v.num()) > 1000) throw ModelError("SyntaxError", "exponent too large", at);
    return v.num().get_si();
  }

  ExprPtr atom() {
    const Token& tk = peek();
    if (tk.kind == Token::Kind::Number) {
      auto n = node(Expr::Kind::Number, tk.loc);
      n->value = number_value(tk.text, tk.loc);
      ++i_;
      return n;
    }
    if (is_op("(")) {
      if (++depth_ > 256) fail("expression nested too deeply");
      ++i_;
      ExprPtr e = sum();
      expect(")");
      --depth_;
      return e;
    }
    if (tk.kind == Token::Kind::Ident) {
      std::string name = tk.text;
      SourceLoc at = tk.loc;
      ++i_;
      if (!is_op("(")) {
        auto n = node(Expr::Kind::Symbol, at);
        n->name = name;
        return n;
      }
      if (time_arg_follows()) {
        if (kTranscendental.count(name))
          throw ModelError("NonRationalError", "function '" + name + "' is not rational", at);
        if (name == "diff")
          throw ModelError("UnknownSymbolUse", "derivatives may not appear on a right-hand side", at);
        i_ += 3;
        auto n = node(Expr::Kind::Symbol, at);
        n->name = name;
        n->timed = true;
        return n;
      }
      if (kTranscendental.count(name))
        throw ModelError("NonRationalError", "function '" + name + "' is not rational", at);
      if (name == "diff")
        throw ModelError("UnknownSymbolUse", "derivatives may not appear on a right-hand side", at);
      throw ModelError("SyntaxError", "unknown function '" + name + "'", at);
    }
    fail("expected an expression");
  }

  const std::vector<Token>& t_;
  Syntax syntax_;
  std::size_t i_ = 0;
  int depth_ = 0;
  int signs_ = 0;
};

struct Usage {
  bool timed = false;
  bool bare = false;
  SourceLoc first;
  SourceLoc bare_loc;
  SourceLoc timed_loc;
};

void collect(const Expr& e, std::map<std::string, Usage>& use, std::vector<std::string>& order) {
  if (e.kind == Expr::Kind::Symbol) {
    auto [it, fresh] = use.try_emplace(e.name);
    if (fresh) {
      it->second.first = e.loc;
      order.push_back(e.name);
    }
    if (e.timed) {
      if (!it->second.timed) it->second.timed_loc = e.loc;
      it->second.timed = true;
    } else {
      if (!it->second.bare) it->second.bare_loc = e.loc;
      it->second.bare = true;
    }
    return;
  }
  for (const auto& a : e.args) collect(*a, use, order);
}

RatFun eval(const Expr& e, const RingPtr& ring) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return RatFun::constant(ring, e.value);
    case Expr::Kind::Symbol:
      return RatFun::variable(ring, *ring->index_of(e.name));
    case Expr::Kind::Neg:
      return -eval(*e.args[0], ring);
    case Expr::Kind::Add:
      return eval(*e.args[0], ring) + eval(*e.args[1], ring);
    case Expr::Kind::Sub:
      return eval(*e.args[0], ring) - eval(*e.args[1], ring);
    case Expr::Kind::Mul:
      return eval(*e.args[0], ring) * eval(*e.args[1], ring);
    case Expr::Kind::Div: {
      RatFun d = eval(*e.args[1], ring);
      if (d.is_zero()) throw ModelError("SyntaxError", "division by zero", e.loc);
      return eval(*e.args[0], ring) / d;
    }
    case Expr::Kind::Pow: {
      RatFun b = eval(*e.args[0], ring);
      if (e.exponent >= 0) return b.pow(static_cast<unsigned>(e.exponent));
      if (b.is_zero()) throw ModelError("SyntaxError", "division by zero", e.loc);
      return b.inv().pow(static_cast<unsigned>(-e.exponent));
    }
  }
  return RatFun();
}

Syntax resolve(const std::string& text, Syntax s) { return s == Syntax::Auto ? detect_syntax(text) : s; }

}  // namespace

std::string to_string(Syntax s) {
  switch (s) {
    case Syntax::Auto:
      return "auto";
    case Syntax::MapleLike:
      return "maple-like";
    case Syntax::SlashD:
      return "slash-d";
  }
  return "auto";
}

Syntax syntax_from_string(const std::string& s) {
  if (s == "auto") return Syntax::Auto;
  if (s == "maple-like" || s == "maple") return Syntax::MapleLike;
  if (s == "slash-d" || s == "slashd") return Syntax::SlashD;
  throw std::invalid_argument("unknown syntax '" + s + "' (expected auto, maple-like or slash-d)");
}

std::string to_string(SymbolKind k) {
  switch (k) {
    case SymbolKind::State:
      return "state";
    case SymbolKind::Parameter:
      return "parameter";
    case SymbolKind::Input:
      return "input";
    case SymbolKind::Output:
      return "output";
  }
  return "parameter";
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      std::string na = a.substr(i, i2 - i), nb = b.substr(j, j2 - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = i2;
      j = j2;
      continue;
    }
    char ca = static_cast<char>(std::tolower(static_cast<unsigned char>(a[i])));
    char cb = static_cast<char>(std::tolower(static_cast<unsigned char>(b[j])));
    if (ca != cb) return ca < cb;
    ++i;
    ++j;
  }
  if ((i < a.size()) != (j < b.size())) return j < b.size();
  return a < b;
}

Syntax detect_syntax(const std::string& text) {
  static const std::regex maple(R"(\bdiff\s*\()");
  static const std::regex slash(R"((^|[;\s])d[A-Za-z_]\w*\s*/\s*dt\b)");
  if (std::regex_search(text, maple)) return Syntax::MapleLike;
  if (std::regex_search(text, slash)) return Syntax::SlashD;
  return Syntax::MapleLike;
}

std::vector<Equation> parse_equations(const std::string& text, Syntax syntax) {
  Syntax s = resolve(text, syntax);
  auto toks = tokenize(text);
  return EquationParser(toks, s).run();
}

SymbolTable classify_symbols(const std::vector<Equation>& equations, Syntax syntax) {
  SymbolTable table;
  std::map<std::string, const Equation*> plain, diffs;
  for (const auto& eq : equations) {
    auto& target = eq.derivative ? diffs : plain;
    if (target.count(eq.lhs))
      throw ModelError("DuplicateDefinition", "'" + eq.lhs + "' is defined more than once", eq.loc);
    target[eq.lhs] = &eq;
  }
  for (const auto& [name, eq] : diffs) {
    if (plain.count(name))
      throw ModelError("UnknownSymbolUse", "'" + name + "' is both an output and differentiated", eq->loc);
    table[name] = {SymbolKind::State, eq->loc};
  }
  for (const auto& [name, eq] : plain) table[name] = {SymbolKind::Output, eq->loc};

  std::map<std::string, Usage> use;
  std::vector<std::string> order;
  for (const auto& eq : equations) collect(*eq.rhs, use, order);
  for (const auto& name : order) {
    const Usage& u = use[name];
    if (name == "t") throw ModelError("UnknownSymbolUse", "explicit time dependence is not supported", u.first);
    auto known = table.find(name);
    if (known != table.end()) {
      if (known->second.kind == SymbolKind::State && syntax == Syntax::MapleLike && u.bare)
        throw ModelError("AmbiguousSymbol", "state '" + name + "' used without (t)", u.bare_loc);
      if (known->second.kind == SymbolKind::Output && syntax == Syntax::MapleLike && u.bare)
        throw ModelError("AmbiguousSymbol", "output '" + name + "' used without (t)", u.bare_loc);
      continue;
    }
    if (u.timed && u.bare) {
      if (syntax == Syntax::SlashD)
        throw ModelError("UnknownSymbolUse", "input '" + name + "' must be written as " + name + "(t)", u.bare_loc);
      throw ModelError("AmbiguousSymbol", "'" + name + "' is used both as a constant and as a function of t",
                       u.bare_loc.offset > u.timed_loc.offset ? u.bare_loc : u.timed_loc);
    }
    table[name] = {u.timed ? SymbolKind::Input : SymbolKind::Parameter, u.first};
  }
  return table;
}

RingPtr model_ring(const std::vector<std::string>& states, const std::vector<std::string>& outputs,
                   const std::vector<std::string>& inputs, const std::vector<std::string>& params) {
  std::vector<std::string> names;
  for (const auto* v : {&states, &outputs, &inputs, &params}) names.insert(names.end(), v->begin(), v->end());
  return algebra::make_ring(names);
}

ModelSystem build_model(const std::vector<Equation>& equations, Syntax syntax) {
  if (syntax == Syntax::Auto) syntax = Syntax::MapleLike;
  SymbolTable table = classify_symbols(equations, syntax);
  ModelSystem m;
  for (const auto& eq : equations) (eq.derivative ? m.states : m.outputs).push_back(eq.lhs);
  for (const auto& [name, info] : table) {
    if (info.kind == SymbolKind::Parameter) m.params.push_back(name);
    if (info.kind == SymbolKind::Input) m.inputs.push_back(name);
  }
  std::sort(m.params.begin(), m.params.end(), natural_less);
  std::sort(m.inputs.begin(), m.inputs.end(), natural_less);
  m.ring = model_ring(m.states, m.outputs, m.inputs, m.params);
  m.odes.resize(m.states.size());
  m.obs.resize(m.outputs.size());
  m.ode_locs.resize(m.states.size());
  m.obs_locs.resize(m.outputs.size());
  for (const auto& eq : equations) {
    auto& names = eq.derivative ? m.states : m.outputs;
    std::size_t k = static_cast<std::size_t>(std::find(names.begin(), names.end(), eq.lhs) - names.begin());
    (eq.derivative ? m.odes : m.obs)[k] = eval(*eq.rhs, m.ring);
    (eq.derivative ? m.ode_locs : m.obs_locs)[k] = eq.loc;
  }
  return m;
}

std::vector<std::string> ModelSystem::init_symbols() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < states.size(); ++i) out.push_back(init_symbol(i));
  return out;
}

bool ModelSystem::operator==(const ModelSystem& o) const {
  if (states != o.states || params != o.params || inputs != o.inputs || outputs != o.outputs) return false;
  if (odes.size() != o.odes.size() || obs.size() != o.obs.size()) return false;
  for (std::size_t i = 0; i < odes.size(); ++i)
    if (odes[i] != o.odes[i]) return false;
  for (std::size_t i = 0; i < obs.size(); ++i)
    if (obs[i] != o.obs[i]) return false;
  return true;
}

std::vector<Diagnostic> validate(const ModelSystem& m) {
  std::vector<Diagnostic> out;
  std::set<std::string> seen;
  for (const auto* v : {&m.states, &m.outputs, &m.inputs, &m.params})
    for (const auto& n : *v)
      if (!seen.insert(n).second) out.push_back({"DuplicateSymbol", "'" + n + "' belongs to two symbol classes", {}});
  if (m.states.empty()) out.push_back({"NoStates", "the model has no differential equations", {}});
  if (m.outputs.empty()) out.push_back({"NoOutputs", "the model has no outputs", {}});
  if (!m.ring || m.ring->nvars() != seen.size()) {
    out.push_back({"RingMismatch", "right-hand sides are not expressed over the model symbols", {}});
    return out;
  }
  for (std::size_t i = 0; i < m.states.size(); ++i)
    if (i >= m.odes.size() || !m.odes[i].ring())
      out.push_back({"MissingODE", "state '" + m.states[i] + "' has no differential equation", {}});
  for (std::size_t k = 0; k < m.outputs.size(); ++k)
    if (k >= m.obs.size() || !m.obs[k].ring())
      out.push_back({"MissingOutputEquation", "output '" + m.outputs[k] + "' has no defining equation", {}});
  auto check_rhs = [&](const RatFun& f, const std::string& lhs, SourceLoc loc) {
    if (!f.ring()) return;
    auto a = f.num().support_vars(), b = f.den().support_vars();
    for (std::size_t k = 0; k < m.outputs.size(); ++k) {
      std::size_t v = m.output_var(k);
      if ((v < a.size() && a[v]) || (v < b.size() && b[v]))
        out.push_back({"OutputOnRHS", "output '" + m.outputs[k] + "' appears in the equation for '" + lhs + "'", loc});
    }
  };
  for (std::size_t i = 0; i < m.odes.size() && i < m.states.size(); ++i)
    check_rhs(m.odes[i], m.states[i], i < m.ode_locs.size() ? m.ode_locs[i] : SourceLoc{});
  for (std::size_t k = 0; k < m.obs.size() && k < m.outputs.size(); ++k)
    check_rhs(m.obs[k], m.outputs[k], k < m.obs_locs.size() ? m.obs_locs[k] : SourceLoc{});
  return out;
}

ModelSystem parse_model(const std::string& text, Syntax syntax) {
  Syntax s = resolve(text, syntax);
  auto eqs = parse_equations(text, s);
  ModelSystem m = build_model(eqs, s);
  auto diags = validate(m);
  if (!diags.empty()) throw ModelError("InvalidModel", diags.front().code + ": " + diags.front().message, diags.front().loc);
  return m;
}

std::string render(const ModelSystem& m, const RatFun& f, Syntax syntax) {
  std::vector<std::string> names = m.ring->names();
  auto suffix = [&](std::size_t from, std::size_t count) {
    for (std::size_t i = from; i < from + count; ++i) names[i] += "(t)";
  };
  if (syntax != Syntax::SlashD) {
    suffix(0, m.states.size());
    suffix(m.states.size(), m.outputs.size());
  }
  suffix(m.states.size() + m.outputs.size(), m.inputs.size());
  auto display = algebra::make_ring(names, m.ring->order());
  std::vector<std::size_t> id(names.size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  return f.in_ring(display, id).str();
}

std::string pretty_print(const ModelSystem& m, Syntax syntax) {
  if (syntax == Syntax::Auto) syntax = Syntax::MapleLike;
  std::string out;
  for (std::size_t i = 0; i < m.states.size(); ++i) {
    if (syntax == Syntax::SlashD) out += "d" + m.states[i] + "/dt = ";
    else out += "diff(" + m.states[i] + "(t), t) = ";
    out += render(m, m.odes[i], syntax) + ";\n";
  }
  for (std::size_t k = 0; k < m.outputs.size(); ++k) {
    out += syntax == Syntax::SlashD ? m.outputs[k] : m.outputs[k] + "(t)";
    out += " = " + render(m, m.obs[k], syntax);
    out += k + 1 < m.outputs.size() ? ";\n" : "\n";
  }
  return out;
}

}  // namespace sia::model
