#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace recprs {

// mpq_class keeps numerator/denominator canonical after every arithmetic
// operation: denominator > 0, gcd 1, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal integers). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

Rational pow(const Rational& base, long exponent);

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace recprs
