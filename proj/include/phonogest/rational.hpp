#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace phonogest {

/// Exact rational number used for all solver-side arithmetic.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Exact conversion of a finite double (every finite double is a dyadic rational).
inline Rational from_double(double d) {
  Rational r(d);
  return r;
}

/// Parses "12", "-3/4" or a decimal literal "1.25" exactly. Leading zeros
/// are decimal, never octal.
inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos)
    return parse_rational(text.substr(0, slash)) / parse_rational(text.substr(slash + 1));
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  auto dot = s.find('.');
  std::string digits = dot == std::string::npos ? s : s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad number: " + text);
  boost::multiprecision::cpp_int denom = 1;
  if (dot != std::string::npos)
    for (std::size_t i = dot + 1; i < s.size(); ++i) denom *= 10;
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  Rational q(boost::multiprecision::cpp_int(digits), denom);
  return negative ? Rational(-q) : q;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace phonogest
