#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace clusterlab {

using Integer = mpz_class;

/// Exact rational number. gmp keeps every arithmetic result in lowest terms
/// with a positive denominator; use make_rational() when building from a
/// numerator/denominator pair so that the same holds for literals.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Inverse of to_string. Accepts an optional sign and an optional "/q".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace clusterlab
