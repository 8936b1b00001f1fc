#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace orbitwist {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms with positive denominator. The two-argument
/// mpq_class constructor does not reduce, so fractions go through here.
inline Rational fraction(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text form "p/q" with q > 0 and gcd(p, q) = 1; integers keep "/1".
std::string to_string(const Rational& r);

/// Decimal text of an integer.
std::string to_string(const Integer& z);

struct ParsedRational {
  Rational value;
  /// True when the input text was not already in canonical "p/q" form
  /// (negative denominator, common factor, or missing "/q" is not counted).
  bool canonicalized = false;
};

/// Parses "p", "p/q" or "-p/q". Throws Error(Parse, "cli_io.ParseError") on
/// malformed text or a zero denominator.
ParsedRational parse_rational(std::string_view text);

/// Exact conversion; throws Error(Domain, "core.NotAnInteger") if r has a
/// denominator other than one.
Integer to_integer(const Rational& r);

/// Fits-in-64-bit helper for serialization.
bool fits_int64(const Integer& z);
std::int64_t to_int64(const Integer& z);

} // namespace orbitwist
