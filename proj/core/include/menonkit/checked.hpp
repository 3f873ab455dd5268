#pragma once

#include <cstdint>

#include "menonkit/errors.hpp"

namespace menonkit {

// Exact signed 64-bit arithmetic. Anything that would wrap throws
// menonkit::overflow_error instead of returning a wrong value.

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// base^exp with exp >= 0; checked_pow(x, 0) = 1.
std::int64_t checked_pow(std::int64_t base, int exp);

}  // namespace menonkit
