#include "balsat/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace balsat {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = trim(text);
  if (const auto slash = whole.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(whole.substr(0, slash), whole);
    const BigInt den = parse_integer(whole.substr(slash + 1), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }
  if (const auto dot = whole.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = whole.substr(0, dot);
    const std::string_view frac_part = whole.substr(dot + 1);
    if (frac_part.empty() || frac_part.find_first_of("+-") != std::string_view::npos) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    const bool negative = !int_part.empty() && int_part[0] == '-';
    std::string digits(int_part);
    if (digits.empty() || digits == "-" || digits == "+") digits += "0";
    digits.append(frac_part);
    BigInt den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) den *= 10;
    BigInt num = parse_integer(digits, whole);
    if (negative && num > 0) num = -num;
    return Rational(num, den);
  }
  return Rational(parse_integer(whole, whole));
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

long double to_long_double(const Rational& value) { return value.convert_to<long double>(); }

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result = 1;
  Rational square = base;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= square;
    if (e > 1) square *= square;
  }
  return result;
}

}  // namespace balsat
