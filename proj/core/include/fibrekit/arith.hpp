#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace fibrekit {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

std::string to_string(const Integer& value);

/// Canonical text of a rational: lowest terms, positive denominator,
/// "p/q" or plain "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

Rational max(const Rational& a, const Rational& b);

RatVector to_rational(const IntVector& v);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray (denominators multiplied out, common factor removed).
IntVector clear_denominators(const RatVector& v);

bool is_zero(const IntVector& v);

}  // namespace fibrekit
