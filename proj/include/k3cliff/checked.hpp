#pragma once

// Overflow-checked 64-bit integer arithmetic. Every lattice computation goes
// through these helpers so that results are exact or an exception is thrown.

#include <cstdint>
#include <stdexcept>

namespace k3cliff {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("k3cliff: integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("k3cliff: integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("k3cliff: integer overflow in multiplication");
  return r;
}

/// Floor division for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

}  // namespace checked
}  // namespace k3cliff
