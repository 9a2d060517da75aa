#include "unavoidable/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace unav {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  const Integer n(std::string(num[0] == '+' ? num.substr(1) : num));
  const Integer d(std::string(den[0] == '+' ? den.substr(1) : den));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string to_string(const Rational& value) { return value.str(); }

Integer ceil(const Rational& value) {
  const Integer n = boost::multiprecision::numerator(value);
  const Integer d = boost::multiprecision::denominator(value);
  Integer q = n / d;  // truncates toward zero
  if (q * d < n) ++q;
  return q;
}

}  // namespace unav
