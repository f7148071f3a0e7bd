#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace senstropy {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parses "3/4", "2", or a plain decimal like "0.25" into an exact rational.
Rat parse_rational(const std::string& text);

/// "num/den" (or "num" when the denominator is 1).
std::string format_rational(const Rat& q);

double to_double(const Rat& q);

/// log of a positive big integer, accurate to ~1 ulp even when the value
/// overflows double.
double log_big(const BigInt& n);

}  // namespace senstropy
