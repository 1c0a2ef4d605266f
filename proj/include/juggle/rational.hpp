//
// rational.hpp
//
// Exact rational arithmetic used for every probability and series
// coefficient in the library.
//

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace juggle {

// Expression templates are off so that `auto` always holds a value.
using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Parse "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Render as "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

// r^n for any integer n (r must be nonzero when n < 0).
Rational power(const Rational& r, long n);

double to_double(const Rational& r);

// Smallest rational with denominator 2^bits that is >= x. Used to turn a
// floating-point coin bias into an exact one.
Rational rational_from_double(double x, unsigned bits = 52);

}  // namespace juggle
