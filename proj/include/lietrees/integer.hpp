#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lietrees {

/// Arbitrary-precision integer used for every coefficient and matrix entry.
using Integer = boost::multiprecision::cpp_int;

using IntVector = std::vector<Integer>;

inline std::string to_string(const Integer& v) { return v.str(); }

inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

/// Division rounding toward negative infinity (cpp_int truncates).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::size_t bit_length(const Integer& v) {
  return v == 0 ? 0 : static_cast<std::size_t>(boost::multiprecision::msb(abs(v))) + 1;
}

}  // namespace lietrees
