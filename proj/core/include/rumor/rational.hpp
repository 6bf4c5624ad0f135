#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rumor {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "0.125", "3/8", "1e-3" or "2" into an exact rational. Returns
/// nullopt for anything that is not a finite decimal or a fraction.
std::optional<Rational> parse_rational(std::string_view text);

/// Nearest double (up to a final rounding of a 30-digit expansion).
double to_double(const Rational& value);

/// Renders a rational as "num/den" (or "num" when the denominator is 1).
std::string to_string(const Rational& value);

}  // namespace rumor
