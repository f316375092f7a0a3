#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "lotusfrieze/errors.hpp"

namespace lotusfrieze {

// Frieze entries and continuants grow exponentially in the polygon size, so
// every value that is not a small count lives in an arbitrary-precision type.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline BigInt abs(const BigInt& value) { return value < 0 ? BigInt(-value) : value; }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

/// Parses an unsigned decimal integer; the whole string must be digits.
inline BigInt parse_natural(std::string_view text, std::size_t offset = 0) {
  if (text.empty()) throw ParseError("expected digits", offset);
  BigInt value = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch < '0' || ch > '9') throw ParseError("expected a digit", offset + k);
    value *= 10;
    value += ch - '0';
  }
  return value;
}

/// True when `value` fits in a signed 64-bit integer.
inline bool fits_int64(const BigInt& value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace lotusfrieze
