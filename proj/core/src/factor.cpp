#include "menonkit/factor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>

namespace menonkit {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::int64_t kTrialBound = 1'000'000;

const std::vector<std::int32_t>& small_primes() {
  static const std::vector<std::int32_t> primes = [] {
    std::vector<bool> composite(kTrialBound + 1, false);
    std::vector<std::int32_t> out;
    for (std::int64_t i = 2; i <= kTrialBound; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::int32_t>(i));
      for (std::int64_t j = i * i; j <= kTrialBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin(u64 n) {
  // Seven-base set that is deterministic for all 64-bit inputs.
  constexpr std::array<u64, 7> bases = {2,      325,    9375,      28178,
                                        450775, 9780504, 1795265022};
  const int r = std::countr_zero(n - 1);
  const u64 d = (n - 1) >> r;
  for (u64 a : bases) {
    const u64 a_mod = a % n;
    if (a_mod == 0) continue;
    u64 x = pow_mod(a_mod, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent's cycle variant of Pollard rho. Precondition: n odd composite with
// no prime factor below the trial bound. The (c, x0) ladder is fixed, so
// the returned factor is deterministic.
u64 pollard_brent(u64 n) {
  for (u64 c = 1;; ++c) {
    const auto step = [&](u64 x) { return (static_cast<u64>(u128(x) * x % n) + c) % n; };
    u64 x = 2, y = 2, q = 1, g = 1, xs = 0;
    const u64 block = 128;
    u64 r = 1;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      while (k < r && g == 1) {
        xs = y;
        const u64 lim = std::min(block, r - k);
        for (u64 i = 0; i < lim; ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += block;
      }
      r *= 2;
    }
    if (g == n) {
      // Backtrack one step at a time from the last snapshot.
      g = 1;
      u64 z = xs;
      while (g == 1) {
        z = step(z);
        g = std::gcd(x > z ? x - z : z - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_recursive(u64 n, std::vector<std::int64_t>& out) {
  if (n == 1) return;
  if (miller_rabin(n)) {
    out.push_back(static_cast<std::int64_t>(n));
    return;
  }
  const u64 d = pollard_brent(n);
  factor_recursive(d, out);
  factor_recursive(n / d, out);
}

}  // namespace

std::int64_t Factorization::reconstruct() const {
  std::int64_t prod = 1;
  for (const auto& [p, e] : factors) {
    for (int i = 0; i < e; ++i) prod *= p;
  }
  return prod;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  return miller_rabin(static_cast<u64>(n));
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw domain_error("factorize: n must be positive");
  Factorization f;
  f.n = n;
  if (n == 1) return f;

  std::int64_t rest = n;
  for (std::int32_t p : small_primes()) {
    if (static_cast<std::int64_t>(p) * p > rest) break;
    if (rest % p != 0) continue;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  if (rest > 1) {
    if (rest <= kTrialBound * kTrialBound || is_prime(rest)) {
      // Either rest is prime, or it has no factor below the trial bound and
      // is at most kTrialBound^2 -- which also forces primality.
      f.factors.push_back({rest, 1});
    } else {
      std::vector<std::int64_t> primes;
      factor_recursive(static_cast<u64>(rest), primes);
      std::sort(primes.begin(), primes.end());
      for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.push_back({primes[i], static_cast<int>(j - i)});
        i = j;
      }
    }
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return f;
}

std::vector<std::int64_t> divisors(const Factorization& f) {
  std::vector<std::int64_t> out{1};
  for (const auto& [p, e] : f.factors) {
    const std::size_t base_count = out.size();
    std::int64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base_count; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) { return divisors(factorize(n)); }

}  // namespace menonkit
