#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace partcount {

// Exact arithmetic everywhere: partition counts overflow 64 bits well below
// the truncation orders the verification suites run at, and none of the
// checks tolerate rounding.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// "num" or "num/den"; BigRational::str() is not stable across backends.
inline std::string rational_str(const BigRational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

}  // namespace partcount
