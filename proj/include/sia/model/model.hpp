#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "sia/algebra/ratfun.hpp"

namespace sia::model {

using algebra::RatFun;
using algebra::RingPtr;

struct SourceLoc {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t offset = 0;
};

enum class Syntax { Auto, MapleLike, SlashD };

std::string to_string(Syntax s);
Syntax syntax_from_string(const std::string& s);

/// Parse failure. `code` is one of SyntaxError, NonRationalError,
/// UnknownSymbolUse, DuplicateDefinition, AmbiguousSymbol, InvalidModel.
class ModelError : public std::runtime_error {
 public:
  ModelError(std::string code, const std::string& message, SourceLoc loc)
      : std::runtime_error(message), code_(std::move(code)), loc_(loc) {}
  const std::string& code() const { return code_; }
  const SourceLoc& loc() const { return loc_; }

 private:
  std::string code_;
  SourceLoc loc_;
};

struct Diagnostic {
  std::string code;
  std::string message;
  SourceLoc loc;
};

/// Expression tree of one right-hand side, before symbols are classified.
struct Expr {
  enum class Kind { Number, Symbol, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  algebra::Rational value;  // Number
  std::string name;         // Symbol
  bool timed = false;       // Symbol written as name(t)
  long exponent = 0;        // Pow
  std::vector<std::shared_ptr<const Expr>> args;
  SourceLoc loc;
};
using ExprPtr = std::shared_ptr<const Expr>;

struct Equation {
  std::string lhs;
  bool derivative = false;  // lhs is d(lhs)/dt
  ExprPtr rhs;
  SourceLoc loc;
};

enum class SymbolKind { State, Parameter, Input, Output };
std::string to_string(SymbolKind k);

struct SymbolInfo {
  SymbolKind kind;
  SourceLoc loc;  // first occurrence
};
using SymbolTable = std::map<std::string, SymbolInfo>;

/// x' = f(x, mu, u), y = g(x, mu, u) with rational f and g.
///
/// All right-hand sides live in one ring whose variables are, in order,
/// states, outputs, inputs and parameters.
struct ModelSystem {
  std::vector<std::string> states;
  std::vector<std::string> params;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  RingPtr ring;
  std::vector<RatFun> odes;  // aligned with states
  std::vector<RatFun> obs;   // aligned with outputs
  std::vector<SourceLoc> ode_locs;
  std::vector<SourceLoc> obs_locs;

  std::size_t state_var(std::size_t i) const { return i; }
  std::size_t output_var(std::size_t k) const { return states.size() + k; }
  std::size_t input_var(std::size_t l) const { return states.size() + outputs.size() + l; }
  std::size_t param_var(std::size_t j) const { return states.size() + outputs.size() + inputs.size() + j; }

  /// "x1(0)" for state i.
  std::string init_symbol(std::size_t i) const { return states[i] + "(0)"; }
  std::vector<std::string> init_symbols() const;

  /// Structural equality: same symbol lists and identical right-hand sides.
  bool operator==(const ModelSystem& o) const;
};

/// Builds the ring layout [states, outputs, inputs, params].
RingPtr model_ring(const std::vector<std::string>& states, const std::vector<std::string>& outputs,
                   const std::vector<std::string>& inputs, const std::vector<std::string>& params);

/// Detects `diff(` (maple-like) versus `d<name>/dt` (slash-d).
Syntax detect_syntax(const std::string& text);

/// Splits and parses the equations without classifying symbols.
std::vector<Equation> parse_equations(const std::string& text, Syntax syntax = Syntax::Auto);

SymbolTable classify_symbols(const std::vector<Equation>& equations, Syntax syntax = Syntax::MapleLike);

/// Builds the model from parsed equations; no invariant checks beyond what
/// classification needs.
ModelSystem build_model(const std::vector<Equation>& equations, Syntax syntax = Syntax::MapleLike);

std::vector<Diagnostic> validate(const ModelSystem& m);

/// parse_equations + build_model + validate; throws ModelError.
ModelSystem parse_model(const std::string& text, Syntax syntax = Syntax::Auto);

/// Text in the requested grammar; re-parses to the same model.
std::string pretty_print(const ModelSystem& m, Syntax syntax = Syntax::MapleLike);

/// Renders a function of the model variables in the given grammar
/// (time-dependent symbols as name(t) where that grammar requires it).
std::string render(const ModelSystem& m, const RatFun& f, Syntax syntax);

/// Natural, case-insensitive symbol order (k2 < k10, b0 < g < M < mu).
bool natural_less(const std::string& a, const std::string& b);

}  // namespace sia::model
