#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace qprop {

// Exact rational scalar. Every comparison in the library is exact equality;
// there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Renders "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string format_rational(const Rational& r);

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

}  // namespace qprop
