#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "menonkit/factor.hpp"

namespace menonkit {

/// Mobius function: 0 unless n is squarefree, else (-1)^(#prime factors).
int mobius(std::int64_t n);
int mobius(const Factorization& f);

/// Euler totient, via the product formula.
std::int64_t euler_phi(std::int64_t n);

/// Number of positive divisors.
std::int64_t tau(std::int64_t n);

/// Number of s-th-power divisors: #{d in N : d^s | m}. tau_s(m, 1) = tau(m),
/// and tau_s(n^s, s) = tau(n) because d^s | n^s iff d | n.
std::int64_t tau_s(std::int64_t m, int s);

/// Jordan totient J_s(n) = n^s prod_{p | n} (1 - p^{-s}), evaluated exactly
/// as prod p^{(e-1)s} (p^s - 1). Throws overflow_error when n^s does not fit.
std::int64_t jordan_totient(std::int64_t n, int s);

/// Cohen totient phi_s(n): the size of an s-reduced residue system mod n^s,
/// i.e. #{1 <= m <= n^s : (m, n^s)_s = 1}. Numerically equal to
/// jordan_totient and to klee(n^s, s); kept as its own operation so the
/// counting oracle in the tests pins the equality rather than assuming it.
std::int64_t cohen_totient(std::int64_t n, int s);

/// Klee's function Phi_s(n) = n prod_{p^s | n} (1 - p^{-s}). The product
/// runs over primes whose s-th power divides n -- a prime of n with
/// exponent below s contributes no factor (so klee(12, 2) = 9, not 8).
std::int64_t klee(std::int64_t n, int s);
std::int64_t klee(const Factorization& f, int s);

/// Counting route for Klee's function: #{1 <= m <= n : (m, n)_s = 1}.
/// O(n); the definitional cross-check for klee().
std::int64_t klee_by_count(std::int64_t n, int s);

enum class BatchFn { mobius, phi, jordan, klee, tau_s };

/// Smallest-prime-factor table up to a fixed bound, built by a linear sieve.
/// One table serves every batch function and every s: per-value evaluation
/// walks the factorization recovered from spf. Immutable after construction
/// except for precompute(), which must run before the table is shared.
class SieveTables {
 public:
  /// bound >= 2; at most 2^31 cells.
  explicit SieveTables(std::int64_t bound);

  std::int64_t bound() const { return bound_; }

  /// Smallest prime factor of i, 2 <= i <= bound.
  std::int64_t spf(std::int64_t i) const;

  /// Values of fn over [lo, hi], exactly equal to the point evaluators.
  /// 1 <= lo <= hi <= bound.
  std::vector<std::int64_t> batch_eval(BatchFn fn, int s, std::int64_t lo,
                                       std::int64_t hi) const;

  /// Build (or fetch) the cached full-range value array for (fn, s).
  /// Spot-checks 100 pseudo-random indices against the point evaluator
  /// before handing the array out. Index i holds the value at i; index 0
  /// is unused.
  std::span<const std::int64_t> precompute(BatchFn fn, int s);

 private:
  std::int64_t bound_;
  std::vector<std::uint32_t> spf_;
  std::map<std::pair<int, int>, std::vector<std::int64_t>> cache_;
};

/// Convenience spelling of SieveTables construction.
SieveTables build_sieve(std::int64_t bound);

}  // namespace menonkit
