#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace effort {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "3", "0.25", ".5", "9/16" (optionally signed). Throws Error(usage)
// on anything else; exponents are not supported.
Rational rational_from_string(const std::string& text);

// Exact double -> rational (every finite double is a dyadic rational).
Rational rational_from_double(double value);

double rational_to_double(const Rational& value);

// Terminating decimal ("0.5625") when the reduced denominator is 2^a*5^b,
// otherwise "p/q".
std::string rational_to_string(const Rational& value);

}  // namespace effort
