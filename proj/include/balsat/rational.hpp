#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace balsat {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", an integer "p", or a finite decimal "1.25" (read exactly as 125/100).
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

double to_double(const Rational& value);
long double to_long_double(const Rational& value);

Rational pow(const Rational& base, int exponent);

}  // namespace balsat
