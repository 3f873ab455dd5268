// Brute-force reference implementations used only by the tests. Every
// routine here is deliberately naive (scans, trial division, direct
// complex sums) and shares no code path with the library.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracles {

inline std::int64_t gcd_euclid(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  return b == 0 ? a : gcd_euclid(b, a % b);
}

inline std::int64_t pow_int(std::int64_t base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

inline bool is_prime_scan(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::pair<std::int64_t, int>> factor_trial(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::int64_t> divisors_scan(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Largest l^s dividing n, by enumerating l upward.
inline std::int64_t brute_lspd(std::int64_t n, int s) {
  std::int64_t best = 1;
  for (std::int64_t l = 1;; ++l) {
    const std::int64_t ls = pow_int(l, s);
    if (ls > n) break;
    if (n % ls == 0) best = ls;
  }
  return best;
}

// (a, b)_s by enumerating l with l^s dividing both; either argument may be
// zero (everything divides zero), not both.
inline std::int64_t brute_ggcd(std::int64_t a, std::int64_t b, int s) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  const std::int64_t bound = a == 0 ? b : (b == 0 ? a : (a < b ? a : b));
  std::int64_t best = 1;
  for (std::int64_t l = 1;; ++l) {
    const std::int64_t ls = pow_int(l, s);
    if (ls > bound) break;
    const bool div_a = a == 0 || a % ls == 0;
    const bool div_b = b == 0 || b % ls == 0;
    if (div_a && div_b) best = ls;
  }
  return best;
}

inline std::int64_t phi_count(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (gcd_euclid(m, n) == 1) ++c;
  }
  return c;
}

inline std::int64_t klee_count(std::int64_t n, int s) {
  std::int64_t c = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (brute_ggcd(m, n, s) == 1) ++c;
  }
  return c;
}

inline std::int64_t cohen_count(std::int64_t n, int s) {
  const std::int64_t m = pow_int(n, s);
  std::int64_t c = 0;
  for (std::int64_t v = 1; v <= m; ++v) {
    if (brute_ggcd(v, m, s) == 1) ++c;
  }
  return c;
}

// Number of ordered s-tuples from a complete residue system mod n whose
// gcd is coprime to n.
inline std::int64_t jordan_count(std::int64_t n, int s) {
  std::vector<std::int64_t> tuple(static_cast<std::size_t>(s), 1);
  std::int64_t count = 0;
  for (;;) {
    std::int64_t g = 0;
    for (std::int64_t x : tuple) g = gcd_euclid(g, x);
    if (gcd_euclid(g, n) == 1) ++count;
    std::size_t pos = 0;
    while (pos < tuple.size() && tuple[pos] == n) tuple[pos++] = 1;
    if (pos == tuple.size()) break;
    ++tuple[pos];
  }
  return count;
}

inline std::int64_t tau_s_scan(std::int64_t m, int s) {
  std::int64_t c = 0;
  for (std::int64_t d = 1;; ++d) {
    const std::int64_t ds = pow_int(d, s);
    if (ds > m) break;
    if (m % ds == 0) ++c;
  }
  return c;
}

inline int mobius_def(std::int64_t n) {
  int sign = 1;
  for (const auto& [p, e] : factor_trial(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// Plain (uncompensated) complex sum straight from the definition of the
// Cohen-Ramanujan sum.
inline std::complex<double> crs_naive(std::int64_t r, int s, std::int64_t n) {
  const std::int64_t m = pow_int(r, s);
  std::complex<double> acc{0.0, 0.0};
  const double two_pi = 6.283185307179586476925286766559;
  for (std::int64_t h = 1; h <= m; ++h) {
    if (brute_ggcd(h, m, s) != 1) continue;
    const double angle = two_pi * static_cast<double>(n) * static_cast<double>(h) /
                         static_cast<double>(m);
    acc += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

// The s-analogue gcd sum, entirely via brute_ggcd.
inline std::int64_t menon_brute(std::int64_t n, int s) {
  const std::int64_t m = pow_int(n, s);
  std::int64_t sum = 0;
  for (std::int64_t v = 1; v <= m; ++v) {
    if (brute_ggcd(v, m, s) != 1) continue;
    sum += brute_ggcd(v - 1, m, s);
  }
  return sum;
}

// Fully nested loops for the k+r-fold gcd sum; only usable for tiny cells.
inline std::int64_t menon_general_brute(std::int64_t n, int s,
                                        const std::vector<std::int64_t>& a, int r) {
  const std::int64_t m = pow_int(n, s);
  const int k = static_cast<int>(a.size());
  std::vector<std::int64_t> mv(static_cast<std::size_t>(k), 1);
  std::vector<std::int64_t> bv(static_cast<std::size_t>(r), 1);
  std::int64_t sum = 0;
  for (;;) {
    bool valid = true;
    for (std::int64_t v : mv) {
      if (brute_ggcd(v, m, s) != 1) {
        valid = false;
        break;
      }
    }
    if (valid) {
      for (;;) {
        std::int64_t g = m;
        for (int i = 0; i < k; ++i) g = gcd_euclid(g, mv[i] - a[i]);
        for (std::int64_t b : bv) g = gcd_euclid(g, b);
        sum += brute_lspd(g, s);
        std::size_t bp = 0;
        while (bp < bv.size() && bv[bp] == m) bv[bp++] = 1;
        if (bp == bv.size()) break;
        ++bv[bp];
      }
    }
    std::size_t mp = 0;
    while (mp < mv.size() && mv[mp] == m) mv[mp++] = 1;
    if (mp == mv.size()) break;
    ++mv[mp];
  }
  return sum;
}

}  // namespace oracles
