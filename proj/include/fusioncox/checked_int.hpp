#pragma once

#include <cstdint>

#include "fusioncox/errors.hpp"

namespace fusioncox {

// Exact integer scalar used for structure constants, ring-element
// coefficients and integer Cartan data. All ring arithmetic goes through
// the checked helpers below; anything that would wrap throws instead.
using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

}  // namespace fusioncox
