#pragma once

// Shared parameter/result types and exact 64-bit arithmetic.  Inputs and
// results always fit in a signed 64-bit integer; any intermediate that
// cannot be represented raises std::overflow_error instead of wrapping.

#include <cstdint>
#include <stdexcept>

namespace josephus {

using std::int64_t;
using std::uint64_t;

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in addition");
  return out;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in subtraction");
  return out;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in multiplication");
  return out;
}

// A counting-out problem: n people in a circle, every k-th one removed.
struct params {
  int64_t n = 1;
  int64_t k = 2;

  void validate() const {
    if (n < 1) throw std::domain_error("params: n must be >= 1");
    if (k < 2) throw std::domain_error("params: k must be >= 2");
  }

  // The evaluators keep every intermediate below k*(n+1); inputs where
  // that product does not fit in 64 bits are rejected up front.
  void ensure_headroom() const {
    validate();
    checked_mul(k, checked_add(n, 1));
  }
};

// Survivor seat in [1, n] plus the number of loop steps taken to get it.
struct eval_result {
  int64_t value = 0;
  uint64_t iterations = 0;
};

}  // namespace josephus
