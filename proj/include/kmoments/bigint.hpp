#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kmoments {

/// Exact signed integer used for moments, weight counts and identity sums.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;

inline BigInt pow2(unsigned e) {
  BigInt v = 1;
  return v << e;
}

inline BigInt ipow(BigInt base, unsigned e) { return boost::multiprecision::pow(base, e); }

}  // namespace kmoments
