#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rootstack {

// Exact arithmetic throughout: unbounded integers and canonical rationals
// (reduced, denominator positive).  GMP maintains canonical form after
// every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

// C(n, k) with the generating-function convention: 0 when k < 0 or k > n.
// A negative upper index cannot occur in a correct evaluation, so it is an
// InternalError rather than a value.
Integer binomial(long n, long k);

// n! for n >= 0; negative n is an InternalError.
Integer factorial(long n);

// base^exp for exp >= 0.
Integer int_pow(long base, long exp);

// Canonical text: "p" when the denominator is 1, otherwise "p/q" with
// q >= 2.  Never emits "p/1", a leading '+', or leading zeros.
std::string to_string(const Rational& value);

// Strict inverse of to_string.  Anything else -- unreduced fractions,
// "p/1", zero or negative denominators, leading zeros, signs on the
// denominator -- yields nullopt.
std::optional<Rational> parse_canonical(std::string_view text);

}  // namespace rootstack
