#pragma once

#include <gmpxx.h>

#include <string>

namespace aqrook {

/// Coefficient field: arbitrary-precision rationals, always canonical
/// (positive denominator, gcd(|num|, den) = 1).
using Rational = mpq_class;

/// Canonicalized rational from a (possibly non-reduced) integer pair.
inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p" or "p/q" with q > 0.
std::string to_string(const Rational& r);

/// Inverse of to_string. Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace aqrook
