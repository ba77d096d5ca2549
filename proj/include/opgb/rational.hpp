#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace opgb {

/// Exact coefficients for every linear structure in the library.
using Rational = mpq_class;

/// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace opgb
