#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace toep {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "+p", "-p", "p/q" with a positive denominator. SchemaError on
// anything else, including a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical machine form: "p/q" in lowest terms, or "p" when the denominator
// is 1.
std::string rat_str(const Rational& r);

// Fixed-point decimal with `digits` fractional digits, round half to even.
// Presentation only; never parsed back.
std::string rat_decimal(const Rational& r, int digits = 12);

// Integer exponents of either sign; InputError on 0^negative.
Rational rat_pow(const Rational& base, long e);

Int factorial(long n);  // InputError for n < 0

// InputError when v does not fit in long.
long to_long(const Int& v);

}  // namespace toep
