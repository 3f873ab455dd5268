#include "menonkit/checked.hpp"

namespace menonkit {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw overflow_error("checked_add: 64-bit overflow");
  }
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw overflow_error("checked_sub: 64-bit overflow");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw overflow_error("checked_mul: 64-bit overflow");
  }
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  if (exp < 0) {
    throw domain_error("checked_pow: negative exponent");
  }
  std::int64_t result = 1;
  std::int64_t acc = base;
  while (exp > 0) {
    if (exp & 1) {
      result = checked_mul(result, acc);
    }
    exp >>= 1;
    if (exp > 0) {
      acc = checked_mul(acc, acc);
    }
  }
  return result;
}

}  // namespace menonkit
