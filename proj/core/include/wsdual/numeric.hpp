#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include <boost/rational.hpp>

#include "wsdual/error.hpp"

namespace wsdual {

using Int = std::int64_t;
using Rational = boost::rational<Int>;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw DataError("integer overflow in addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw DataError("integer overflow in multiplication");
  return r;
}

/// gcd of a list; 0 for an empty list or all zeros.
inline Int gcd_of(std::span<const Int> values) {
  Int g = 0;
  for (Int v : values) g = std::gcd(g, v);
  return g;
}

/// Renders p/q, or p when q == 1.
inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace wsdual
