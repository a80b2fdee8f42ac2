#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace s1calc {

// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

// Parses "p" or "p/q" (optional leading '-', decimal digits only).
// Throws InputError on anything else, including q == 0.
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

}  // namespace s1calc
