#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "menonkit/factor.hpp"

namespace menonkit {

/// gcd by magnitude: gcd(0, b) = |b|, gcd(0, 0) = 0.
std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Largest l^s (l in N) dividing n. n >= 1, s >= 1. At s = 1 this is n.
std::int64_t largest_s_power_divisor(std::int64_t n, int s);
std::int64_t largest_s_power_divisor(const Factorization& f, int s);

/// Generalized gcd (a, b)_s: the largest s-th power dividing both a and b.
/// Reduces to gcd at s = 1. Arguments may be zero or negative (divisibility
/// is sign-blind; the negative case is an extension beyond positive inputs),
/// but (0, 0)_s is a domain error.
std::int64_t generalized_gcd(std::int64_t a, std::int64_t b, int s);

/// Multi-argument (v_1, ..., v_m)_s: largest_s_power_divisor of the gcd of
/// all entries. Not all zero.
std::int64_t generalized_gcd(std::span<const std::int64_t> values, int s);

/// True when no l^s with l >= 2 divides n; equivalently
/// largest_s_power_divisor(n, s) = 1.
bool is_s_free(std::int64_t n, int s);

/// Exact s-th root of x >= 0, or nullopt when x is not a perfect s-th power.
std::optional<std::int64_t> exact_root(std::int64_t x, int s);

/// For a fixed modulus M and exponent s, tabulates largest_s_power_divisor
/// over the divisors of M. Turns each (x, M)_s inside an O(M) summation
/// loop into one gcd plus one binary search instead of a factorization.
class DivisorSPowerTable {
 public:
  DivisorSPowerTable(std::int64_t modulus, int s);

  std::int64_t modulus() const { return modulus_; }
  int s() const { return s_; }

  /// largest_s_power_divisor(d, s) for d | modulus.
  std::int64_t s_power_part(std::int64_t d) const;

  /// (x, M)_s for any integer x, with (0, M)_s = M.
  std::int64_t ggcd(std::int64_t x) const;

 private:
  std::int64_t modulus_;
  int s_;
  std::vector<std::int64_t> divisors_;  // ascending
  std::vector<std::int64_t> parts_;     // parts_[i] = lspd(divisors_[i], s)
};

}  // namespace menonkit
