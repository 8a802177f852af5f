#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace gameprob {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const Rational& r);

/// Percentage with four decimals, rounded half up: 1/6 -> "16.6667%".
/// Exact 0 and 1 are rendered as "0%" and "100%".
std::string to_percent_string(const Rational& r);

}  // namespace gameprob
