#pragma once

#include <gmpxx.h>

#include "sia/algebra/poly.hpp"

namespace sia::algebra {

/// Least common multiple of the coefficient denominators.
mpz_class denominator_lcm(const QPoly& p);

/// Positive rational c such that p/c has coprime integer coefficients and a
/// positive leading coefficient. Zero polynomial gives 1.
Rational rational_content(const QPoly& p);

/// p divided by its rational content.
QPoly primitive_part(const QPoly& p);

/// Greatest common divisor over Q, normalized as a primitive integer
/// polynomial with positive leading coefficient (gcd(0, 0) = 0).
QPoly gcd(const QPoly& a, const QPoly& b);

}  // namespace sia::algebra
