#pragma once

#include <cstdint>
#include <string>

#include "menonkit/checked.hpp"

namespace menonkit {

/// Exact rational on checked 64-bit integers, always reduced, denominator
/// positive. Overflow in any intermediate throws overflow_error; it is
/// never rounded away.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit from integers
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  /// The exact integer value; internal_error when the value is not integral.
  std::int64_t as_integer() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;

  std::string str() const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace menonkit
