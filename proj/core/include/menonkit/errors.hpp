#pragma once

#include <stdexcept>

namespace menonkit {

// Bad argument: zero where a positive integer is required, an all-zero
// gcd, a table range past the sieve bound, ...
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Checked 64-bit arithmetic left the representable range.
struct overflow_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A floating-point route missed its residual tolerance. Signals an
// implementation bug, not bad input.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Estimated work exceeds the configured iteration budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An exactness assertion failed (inexact division, non-integer total).
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace menonkit
