#include "menonkit/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "menonkit/checked.hpp"

namespace menonkit {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

std::int64_t largest_s_power_divisor(const Factorization& f, int s) {
  if (s < 1) throw domain_error("largest_s_power_divisor: s must be positive");
  std::int64_t out = 1;
  for (const auto& [p, e] : f.factors) {
    const int kept = e - e % s;
    for (int i = 0; i < kept; ++i) out *= p;  // divides n, cannot overflow
  }
  return out;
}

std::int64_t largest_s_power_divisor(std::int64_t n, int s) {
  if (n < 1) throw domain_error("largest_s_power_divisor: n must be positive");
  if (s == 1) return n;
  return largest_s_power_divisor(factorize(n), s);
}

std::int64_t generalized_gcd(std::int64_t a, std::int64_t b, int s) {
  if (a == 0 && b == 0) throw domain_error("generalized_gcd: arguments must not both be zero");
  if (s < 1) throw domain_error("generalized_gcd: s must be positive");
  return largest_s_power_divisor(gcd(a, b), s);
}

std::int64_t generalized_gcd(std::span<const std::int64_t> values, int s) {
  if (values.empty()) throw domain_error("generalized_gcd: empty argument list");
  std::int64_t g = 0;
  for (std::int64_t v : values) g = gcd(g, v);
  if (g == 0) throw domain_error("generalized_gcd: arguments must not all be zero");
  return largest_s_power_divisor(g, s);
}

bool is_s_free(std::int64_t n, int s) {
  return largest_s_power_divisor(n, s) == 1;
}

DivisorSPowerTable::DivisorSPowerTable(std::int64_t modulus, int s)
    : modulus_(modulus), s_(s) {
  if (modulus < 1) throw domain_error("DivisorSPowerTable: modulus must be positive");
  if (s < 1) throw domain_error("DivisorSPowerTable: s must be positive");
  const Factorization f = factorize(modulus);
  const std::size_t k = f.factors.size();
  std::vector<int> exps(k, 0);
  // Odometer over exponent vectors; the s-power part follows each divisor
  // incrementally, so nothing is re-factorized.
  for (;;) {
    std::int64_t d = 1, part = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const std::int64_t p = f.factors[i].prime;
      for (int j = 0; j < exps[i]; ++j) d *= p;
      const int kept = exps[i] - exps[i] % s;
      for (int j = 0; j < kept; ++j) part *= p;
    }
    divisors_.push_back(d);
    parts_.push_back(part);
    std::size_t pos = 0;
    while (pos < k && exps[pos] == f.factors[pos].exponent) {
      exps[pos] = 0;
      ++pos;
    }
    if (pos == k) break;
    ++exps[pos];
  }
  // Sort both arrays by divisor value for binary-search lookup.
  std::vector<std::size_t> order(divisors_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return divisors_[a] < divisors_[b]; });
  std::vector<std::int64_t> dsorted(order.size()), psorted(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    dsorted[i] = divisors_[order[i]];
    psorted[i] = parts_[order[i]];
  }
  divisors_ = std::move(dsorted);
  parts_ = std::move(psorted);
}

std::int64_t DivisorSPowerTable::s_power_part(std::int64_t d) const {
  const auto it = std::lower_bound(divisors_.begin(), divisors_.end(), d);
  if (it == divisors_.end() || *it != d) {
    throw domain_error("DivisorSPowerTable: value is not a divisor of the modulus");
  }
  return parts_[static_cast<std::size_t>(it - divisors_.begin())];
}

std::int64_t DivisorSPowerTable::ggcd(std::int64_t x) const {
  return s_power_part(gcd(x, modulus_));
}

std::optional<std::int64_t> exact_root(std::int64_t x, int s) {
  if (x < 0) throw domain_error("exact_root: negative argument");
  if (s < 1) throw domain_error("exact_root: s must be positive");
  if (x <= 1 || s == 1) return x;
  auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(x), 1.0 / s)));
  // pow is only a seed; settle on the exact floor root, then verify.
  const auto pow_leq = [&](std::int64_t r) {
    // r^s <= x without overflow.
    std::int64_t acc = 1;
    for (int i = 0; i < s; ++i) {
      if (acc > x / r) return false;
      acc *= r;
    }
    return acc <= x;
  };
  if (guess < 1) guess = 1;
  while (guess > 1 && !pow_leq(guess)) --guess;
  while (pow_leq(guess + 1)) ++guess;
  return checked_pow(guess, s) == x ? std::optional<std::int64_t>(guess) : std::nullopt;
}

}  // namespace menonkit
