#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace baldom {

// All solver arithmetic is exact: arbitrary-precision integers and rationals.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" for integers, "p/q" otherwise.
inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace baldom
