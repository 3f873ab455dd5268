#include "menonkit/rational.hpp"

#include <numeric>

#include "menonkit/arith.hpp"

namespace menonkit {

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) throw domain_error("Rational: zero denominator");
  if (den_ < 0) {
    num_ = checked_sub(0, num_);
    den_ = checked_sub(0, den_);
  }
  const std::int64_t g = gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

std::int64_t Rational::as_integer() const {
  if (den_ != 1) throw internal_error("Rational::as_integer: value is not integral");
  return num_;
}

Rational& Rational::operator+=(const Rational& rhs) {
  // a/b + c/d with g = gcd(b, d) to keep intermediates small.
  const std::int64_t g = gcd(den_, rhs.den_);
  const std::int64_t den_r = rhs.den_ / g;
  const std::int64_t t =
      checked_add(checked_mul(num_, den_r), checked_mul(rhs.num_, den_ / g));
  *this = Rational(t, checked_mul(den_, den_r));
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  return *this += Rational(checked_sub(0, rhs.num_), rhs.den_);
}

Rational& Rational::operator*=(const Rational& rhs) {
  // Cross-reduce before multiplying.
  const std::int64_t g1 = gcd(num_, rhs.den_);
  const std::int64_t g2 = gcd(rhs.num_, den_);
  num_ = checked_mul(num_ / g1, rhs.num_ / g2);
  den_ = checked_mul(den_ / g2, rhs.den_ / g1);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw domain_error("Rational: division by zero");
  return *this *= Rational(rhs.den_, rhs.num_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace menonkit
