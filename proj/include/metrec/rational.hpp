#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace metrec {

using Rational = mpq_class;

/// Parses an exact rational from "p", "p/q", or a decimal literal such as
/// "1.25", ".5" or "3e-2". Decimal literals are converted exactly (1.25 -> 5/4).
/// Throws ParseError (column relative to the token) on malformed input.
Rational parse_rational(std::string_view token);

/// Canonical text form: "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational& value);

}  // namespace metrec
