#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlag {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms (q is always printed, even when it is 1).
inline std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

/// Exact value of a terminating decimal literal such as "0.2498".
Rational parse_decimal(const std::string& text);

}  // namespace hyperlag
