#include "menonkit/identities.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

#include "menonkit/arith.hpp"
#include "menonkit/checked.hpp"
#include "menonkit/totients.hpp"

namespace menonkit {

namespace {

constexpr std::int64_t kMenonSCap = 10'000'000;
constexpr std::int64_t kComplexSumCap = 1'000'000;

struct KahanComplex {
  double re = 0, re_c = 0, im = 0, im_c = 0;

  void add(double r, double i) {
    double y = r - re_c;
    double t = re + y;
    re_c = (t - re) - y;
    re = t;
    y = i - im_c;
    t = im + y;
    im_c = (t - im) - y;
    im = t;
  }
  void add(std::complex<double> z) { add(z.real(), z.imag()); }

  std::complex<double> value() const { return {re, im}; }
};

// e^(2 pi i a b / m) with exact reduction of a b mod m; both factors must
// already be reduced mod m so the product stays inside 64 bits.
std::complex<double> unit_root(std::int64_t a_red, std::int64_t b_red, std::int64_t m) {
  const std::int64_t t = (a_red * b_red) % m;
  const double angle = 2.0 * std::numbers::pi * (static_cast<double>(t) / static_cast<double>(m));
  return {std::cos(angle), std::sin(angle)};
}

std::int64_t reduce_mod(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) return UINT64_MAX;
  return out;
}

std::int64_t pow_budgeted(std::int64_t n, int s, std::int64_t cap, const char* who) {
  if (n < 1) throw domain_error(std::string(who) + ": n must be positive");
  if (s < 1) throw domain_error(std::string(who) + ": s must be positive");
  const std::int64_t m = checked_pow(n, s);
  if (m > cap) {
    throw budget_error(std::string(who) + ": n^s exceeds the " + std::to_string(cap) +
                       " budget");
  }
  return m;
}

}  // namespace

int orthogonality_indicator(std::int64_t d_s, std::int64_t n) {
  if (d_s < 1) throw domain_error("orthogonality_indicator: modulus must be positive");
  return n % d_s == 0 ? 1 : 0;
}

std::complex<double> orthogonality_indicator_sum(std::int64_t d_s, std::int64_t n) {
  if (d_s < 1) throw domain_error("orthogonality_indicator_sum: modulus must be positive");
  const std::int64_t n_red = reduce_mod(n, d_s);
  KahanComplex acc;
  for (std::int64_t k = 1; k <= d_s; ++k) acc.add(unit_root(k % d_s, n_red, d_s));
  return acc.value() / static_cast<double>(d_s);
}

std::int64_t menon_classical_lhs(std::int64_t n) {
  if (n < 1) throw domain_error("menon_classical_lhs: n must be positive");
  std::int64_t sum = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    sum = checked_add(sum, std::gcd(m - 1, n));
  }
  return sum;
}

std::int64_t menon_s_lhs(std::int64_t n, int s) {
  const std::int64_t m = pow_budgeted(n, s, kMenonSCap, "menon_s_lhs");
  const DivisorSPowerTable table(m, s);
  std::int64_t sum = 0;
  for (std::int64_t v = 1; v <= m; ++v) {
    if (table.ggcd(v) != 1) continue;
    sum = checked_add(sum, table.ggcd(v - 1));
  }
  return sum;
}

std::int64_t menon_s_rhs(std::int64_t n, int s) {
  if (n < 1) throw domain_error("menon_s_rhs: n must be positive");
  if (s < 1) throw domain_error("menon_s_rhs: s must be positive");
  const std::int64_t m = checked_pow(n, s);
  return checked_mul(klee(m, s), tau_s(m, s));
}

std::uint64_t menon_general_work_estimate(std::int64_t n, int s, int k, int r) {
  if (n < 1 || s < 1 || k < 1 || r < 0) {
    throw domain_error("menon_general_work_estimate: bad parameters");
  }
  const std::int64_t m = checked_pow(n, s);
  const auto phi = static_cast<std::uint64_t>(klee(m, s));
  std::uint64_t est = 1;
  for (int i = 0; i < k; ++i) est = sat_mul(est, phi);
  if (r > 0) {
    // Residue-collapsed b positions: every memoized B(g, depth) entry costs
    // at most g <= n^s additions, one entry per divisor and depth.
    est = sat_add(est, sat_mul(static_cast<std::uint64_t>(r),
                               sat_mul(static_cast<std::uint64_t>(tau_s(m, 1)),
                                       static_cast<std::uint64_t>(m))));
  }
  return est;
}

std::int64_t menon_general_lhs(std::int64_t n, int s, std::span<const std::int64_t> a,
                               int r, std::uint64_t budget) {
  if (a.empty()) throw domain_error("menon_general_lhs: need at least one constrained position");
  if (r < 0) throw domain_error("menon_general_lhs: r must be nonnegative");
  const std::int64_t m = checked_pow(n, s);
  const int k = static_cast<int>(a.size());
  if (menon_general_work_estimate(n, s, k, r) > budget) {
    throw budget_error("menon_general_lhs: work estimate exceeds budget");
  }

  const DivisorSPowerTable table(m, s);
  for (std::int64_t ai : a) {
    if (table.ggcd(ai) != 1) {
      throw domain_error("menon_general_lhs: every a_i must satisfy (a_i, n^s)_s = 1");
    }
  }

  std::vector<std::int64_t> valid;
  for (std::int64_t v = 1; v <= m; ++v) {
    if (table.ggcd(v) == 1) valid.push_back(v);
  }

  // B(g, depth) = sum over b_1..b_depth in [1, n^s] of
  // largest_s_power_divisor(gcd(g, b_1, ..., b_depth), s), for g | n^s.
  // gcd(g, b) only depends on b mod g, and each class holds n^s/g values.
  std::map<std::pair<std::int64_t, int>, std::int64_t> memo;
  const std::function<std::int64_t(std::int64_t, int)> b_sum = [&](std::int64_t g,
                                                                   int depth) -> std::int64_t {
    if (depth == 0) return table.s_power_part(g);
    const auto key = std::make_pair(g, depth);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t inner = 0;
    for (std::int64_t c = 1; c <= g; ++c) {
      inner = checked_add(inner, b_sum(std::gcd(g, c), depth - 1));
    }
    const std::int64_t total = checked_mul(m / g, inner);
    memo.emplace(key, total);
    return total;
  };

  std::int64_t sum = 0;
  const std::function<void(std::size_t, std::int64_t)> walk = [&](std::size_t i,
                                                                  std::int64_t g) {
    if (i == a.size()) {
      sum = checked_add(sum, b_sum(g, r));
      return;
    }
    for (std::int64_t v : valid) walk(i + 1, gcd(g, checked_sub(v, a[i])));
  };
  walk(0, m);
  return sum;
}

std::int64_t menon_general_rhs(std::int64_t n, int s, int k, int r) {
  if (n < 1 || s < 1 || k < 1 || r < 0) throw domain_error("menon_general_rhs: bad parameters");
  const std::int64_t m = checked_pow(n, s);
  Rational acc(0);
  for (std::int64_t d : divisors(n)) {
    const std::int64_t ds = checked_pow(d, s);
    const std::int64_t numer = checked_pow(ds, r);
    const std::int64_t denom = checked_pow(klee(checked_pow(n / d, s), s), k - 1);
    acc += Rational(numer, denom);
  }
  acc *= Rational(checked_pow(klee(m, s), k));
  if (!acc.is_integer()) {
    throw internal_error("menon_general_rhs: total is not an integer");
  }
  return acc.as_integer();
}

Rational lemma1_lhs(std::int64_t n, int s) {
  if (n < 1 || s < 1) throw domain_error("lemma1_lhs: bad parameters");
  const std::int64_t m = checked_pow(n, s);
  return Rational(m, klee(m, s));
}

Rational lemma1_rhs(std::int64_t n, int s) {
  if (n < 1 || s < 1) throw domain_error("lemma1_rhs: bad parameters");
  Rational acc(0);
  for (std::int64_t d : divisors(n)) {
    if (mobius(d) == 0) continue;  // mu(d)^2 is 1 on squarefree d, 0 otherwise
    acc += Rational(1, klee(checked_pow(d, s), s));
  }
  return acc;
}

bool lemma1_check(std::int64_t n, int s) { return lemma1_lhs(n, s) == lemma1_rhs(n, s); }

std::complex<double> lemma2_lhs(std::int64_t n, int s, const PairFn& psi) {
  const std::int64_t m = pow_budgeted(n, s, kComplexSumCap, "lemma2_lhs");
  const DivisorSPowerTable table(m, s);
  KahanComplex acc;
  for (std::int64_t k = 1; k <= m; ++k) {
    acc.add(psi(k, m) * static_cast<double>(table.ggcd(k)));
  }
  return acc.value();
}

namespace {

std::complex<double> lemma2_divisor_sum(std::int64_t n, int s, const PairFn& psi,
                                        bool constant_weight) {
  const std::int64_t m = pow_budgeted(n, s, kComplexSumCap, "lemma2_rhs");
  const std::int64_t outer = klee(m, s);
  KahanComplex acc;
  for (std::int64_t d : divisors(n)) {
    const std::int64_t ds = checked_pow(d, s);
    const double weight =
        static_cast<double>(constant_weight ? outer : klee(ds, s));
    for (std::int64_t j = 1; j <= m / ds; ++j) {
      acc.add(psi(ds * j, m) * weight);
    }
  }
  return acc.value();
}

}  // namespace

std::complex<double> lemma2_rhs(std::int64_t n, int s, const PairFn& psi) {
  return lemma2_divisor_sum(n, s, psi, false);
}

std::complex<double> lemma2_rhs_constant_weight(std::int64_t n, int s, const PairFn& psi) {
  return lemma2_divisor_sum(n, s, psi, true);
}

bool lemma2_check(std::int64_t n, int s, const PairFn& psi) {
  return within_identity_tolerance(lemma2_lhs(n, s, psi), lemma2_rhs(n, s, psi));
}

std::complex<double> lemma3_lhs(std::int64_t n, int s, std::int64_t j) {
  const std::int64_t m = pow_budgeted(n, s, kComplexSumCap, "lemma3_lhs");
  const DivisorSPowerTable table(m, s);
  const std::int64_t j_red = reduce_mod(j, m);
  KahanComplex acc;
  for (std::int64_t b = 1; b <= m; ++b) {
    const auto w = static_cast<double>(table.ggcd(b));
    const std::complex<double> z = unit_root(b % m, j_red, m);
    acc.add(w * z.real(), w * z.imag());
  }
  return acc.value();
}

std::int64_t lemma3_rhs(std::int64_t n, int s, std::int64_t j) {
  if (n < 1 || s < 1) throw domain_error("lemma3_rhs: bad parameters");
  const std::int64_t m = checked_pow(n, s);
  const DivisorSPowerTable table(m, s);
  const std::int64_t g = table.ggcd(j);  // (0, n^s)_s = n^s falls out of gcd(0, m) = m
  const auto l = exact_root(g, s);
  if (!l) throw internal_error("lemma3_rhs: (j, n^s)_s is not an s-th power");
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(*l)) {
    const std::int64_t ds = checked_pow(d, s);
    sum = checked_add(sum, checked_mul(ds, klee(m / ds, s)));
  }
  return sum;
}

bool within_identity_tolerance(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) < 1e-6 * (1.0 + std::abs(b));
}

}  // namespace menonkit
