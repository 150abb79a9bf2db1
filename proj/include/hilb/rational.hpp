#pragma once

#include <gmpxx.h>

#include <string>

#include "hilb/error.hpp"

namespace hilb {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p" or "p/q" (base 10).  Throws DomainError on malformed input
/// or zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical "p" / "p/q" form.
std::string rational_to_string(const Rat& value);

Int parse_integer(const std::string& text);

/// Binomial coefficient C(top, k); zero when top < k or k < 0.
Int binomial(const Int& top, unsigned long k);

/// q^e for integer e (negative e inverts; q must be nonzero then).
Rat rat_pow(const Rat& base, long exponent);

/// num/den in canonical form (the raw two-argument mpq_class constructor
/// does not canonicalize, which breaks equality comparisons).
Rat make_fraction(const Int& num, const Int& den);

/// Exact conversion helpers; throw DomainError when the value does not fit.
long to_long(const Int& value);
Int rat_to_int(const Rat& value); // requires denominator 1

} // namespace hilb
