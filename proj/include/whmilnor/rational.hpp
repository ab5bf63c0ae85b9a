#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace whm {

/// Exact rational number. GMP keeps results of arithmetic in lowest terms with a
/// positive denominator; values built from a raw numerator/denominator pair must
/// go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& value);

/// Accepts "a", "-a", "a/b". Throws ParseError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace whm
