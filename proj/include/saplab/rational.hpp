#pragma once

#include <gmpxx.h>

#include <string>

namespace saplab {

// Exact arithmetic types. Every identity in this library holds with zero
// tolerance, so the core computes in arbitrary-precision rationals and only
// converts to double at the presentation layer or in the *_fp fast paths.
using Integer = mpz_class;
using Rational = mpq_class;

// Parses "17", "-4", or "p/q" (e.g. "-7/3") into a canonical rational.
// Throws std::invalid_argument on anything else (including zero denominators).
Rational parse_rational(const std::string& text);

// Canonical text form: integral values render bare, everything else as "p/q".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// base^exp, exact. exp = 0 gives 1.
Rational rational_pow(const Rational& base, unsigned long exp);

} // namespace saplab
