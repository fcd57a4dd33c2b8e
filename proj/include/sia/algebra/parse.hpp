#pragma once

#include <stdexcept>
#include <string>

#include "sia/algebra/poly.hpp"

namespace sia::algebra {

struct PolyParseError : std::invalid_argument {
  explicit PolyParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Parses a polynomial over the rationals in the variables of `ring`:
/// sums/products of numbers, variable names, parentheses and `^k`.
QPoly parse_poly(const RingPtr& ring, const std::string& text);

}  // namespace sia::algebra
