#pragma once

#include <cstdint>
#include <vector>

#include "menonkit/errors.hpp"

namespace menonkit {

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical prime-power decomposition of a positive integer. Primes are
/// strictly ascending, every exponent is >= 1, and factors is empty exactly
/// for n = 1.
struct Factorization {
  std::int64_t n = 1;
  std::vector<PrimePower> factors;

  // Product of the prime powers; equals n for any value this library builds.
  std::int64_t reconstruct() const;
};

/// Deterministic Miller-Rabin over the full signed 64-bit range.
bool is_prime(std::int64_t n);

/// Factor n >= 1: trial division over a precomputed small-prime list
/// (primes below 10^6), Pollard-Brent rho for whatever survives. The rho
/// parameter ladder is fixed, so results are deterministic.
Factorization factorize(std::int64_t n);

/// All positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);
std::vector<std::int64_t> divisors(const Factorization& f);

}  // namespace menonkit
