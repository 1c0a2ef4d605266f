//
// rational.cpp
//

#include "juggle/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace juggle {

namespace {

Integer parse_integer(std::string_view s)
{
  if (s.empty()) {
    throw std::invalid_argument("empty integer");
  }
  size_t i = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = (s[0] == '-');
    i = 1;
  }
  if (i == s.size()) {
    throw std::invalid_argument("not an integer: " + std::string(s));
  }
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("not an integer: " + std::string(s));
    }
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw std::invalid_argument("zero denominator: " + std::string(text));
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r)
{
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

Rational power(const Rational& r, long n)
{
  if (n < 0) {
    if (r == 0) {
      throw std::domain_error("zero to a negative power");
    }
    return power(Rational(1) / r, -n);
  }
  Rational result = 1;
  Rational base = r;
  while (n > 0) {
    if (n & 1) {
      result *= base;
    }
    n >>= 1;
    if (n > 0) {
      base *= base;
    }
  }
  return result;
}

double to_double(const Rational& r)
{
  return r.convert_to<double>();
}

Rational rational_from_double(double x, unsigned bits)
{
  if (!std::isfinite(x)) {
    throw std::invalid_argument("non-finite value");
  }
  const double scaled = std::ceil(std::ldexp(x, static_cast<int>(bits)));
  Integer num(static_cast<long long>(scaled));
  return Rational(num, Integer(1) << bits);
}

}  // namespace juggle
