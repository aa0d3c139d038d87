#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace logcy {

// Arbitrary-precision scalars. Long blow-up words push entries past any
// fixed machine width, so nothing in the library uses built-in integers for
// self-intersection data.
using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Parses a decimal integer; throws MalformedInput on garbage.
Integer parse_integer(std::string_view text);

/// Accepts "p" or "p/q" (q nonzero); the result is canonicalized.
Rational parse_rational(std::string_view text);

}  // namespace logcy
