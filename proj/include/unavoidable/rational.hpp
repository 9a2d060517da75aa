#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace unav {

/// Exact arbitrary-precision rational. All measure arithmetic uses this type.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Parses "p/q", "-p/q" or an integer. Throws std::invalid_argument otherwise
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Smallest integer >= value.
Integer ceil(const Rational& value);

}  // namespace unav
