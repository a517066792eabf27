#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace exring {

/// Exact coefficient field. GMP keeps mpq values canonical after every
/// arithmetic operation (lowest terms, positive denominator).
using Rational = mpq_class;

/// Arbitrary-precision nonnegative counts.
using BigInt = mpz_class;

/// Formats as "num/den", always including the denominator.
std::string to_fraction_string(const Rational& q);

/// Accepts "n", "n/d", with optional sign. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace exring
