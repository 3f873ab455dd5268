#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>

#include "menonkit/rational.hpp"

namespace menonkit {

/// 1 iff d_s | n, else 0. d_s >= 1, n any integer.
int orthogonality_indicator(std::int64_t d_s, std::int64_t n);

/// Floating-point twin of the indicator: (1/D) sum_{k=1..D} e^(2 pi i k n / D).
/// Converges to 1 or 0 exactly when the exact route says so; kept for
/// cross-validation of every geometric-sum collapse used by the identities.
std::complex<double> orthogonality_indicator_sum(std::int64_t d_s, std::int64_t n);

/// sum_{m=1..n, gcd(m,n)=1} gcd(m-1, n), with gcd(0, n) = n at m = 1.
/// Equals phi(n) tau(n).
std::int64_t menon_classical_lhs(std::int64_t n);

/// sum over 1 <= m <= n^s with (m, n^s)_s = 1 of (m-1, n^s)_s, brute force.
/// O(n^s); n^s above 10^7 is a budget error.
std::int64_t menon_s_lhs(std::int64_t n, int s);

/// Phi_s(n^s) tau_s(n^s), the closed form the brute-force sum must equal.
std::int64_t menon_s_rhs(std::int64_t n, int s);

/// Work estimate for menon_general_lhs: Phi_s(n^s)^k tuples over the
/// constrained positions plus the collapsed cost of the r unconstrained
/// positions. Saturates instead of overflowing.
std::uint64_t menon_general_work_estimate(std::int64_t n, int s, int k, int r);

/// The k+r-fold gcd sum: over all m_1..m_k in [1, n^s] with
/// (m_i, n^s)_s = 1 and all b_1..b_r in [1, n^s], sums
/// (m_1 - a_1, ..., m_k - a_k, b_1, ..., b_r, n^s)_s.
///
/// Every a_i must satisfy (a_i, n^s)_s = 1 (domain error otherwise);
/// k = a.size() >= 1. The unconstrained b positions are collapsed exactly:
/// for g | n^s each residue class mod g holds exactly n^s/g of the b
/// values, so their sums reduce to residue sums mod g, memoized per
/// (g, depth). A work estimate above the budget raises budget_error
/// before any evaluation starts.
std::int64_t menon_general_lhs(std::int64_t n, int s, std::span<const std::int64_t> a,
                               int r, std::uint64_t budget = 100'000'000);

/// Phi_s(n^s)^k sum_{d^s | n^s} (d^s)^r / Phi_s(n^s/d^s)^(k-1), accumulated
/// as an exact rational. The total is asserted integral -- a non-integer
/// would falsify the identity and raises internal_error.
std::int64_t menon_general_rhs(std::int64_t n, int s, int k, int r);

/// Both sides of n^s / Phi_s(n^s) = sum_{d|n} mu(d)^2 / Phi_s(d^s), as
/// reduced exact rationals.
Rational lemma1_lhs(std::int64_t n, int s);
Rational lemma1_rhs(std::int64_t n, int s);
bool lemma1_check(std::int64_t n, int s);

/// Arbitrary complex-valued weight psi(k; m) on N^2.
using PairFn = std::function<std::complex<double>(std::int64_t, std::int64_t)>;

/// sum_{k=1..n^s} psi(k; n^s) (k, n^s)_s. n^s above 10^6 is a budget error.
std::complex<double> lemma2_lhs(std::int64_t n, int s, const PairFn& psi);

/// The decomposition that actually holds:
/// sum_{d^s | n^s} Phi_s(d^s) sum_{j=1..n^s/d^s} psi(d^s j; n^s).
std::complex<double> lemma2_rhs(std::int64_t n, int s, const PairFn& psi);

/// Negative control: the same double sum with the constant weight
/// Phi_s(n^s) in place of Phi_s(d^s). NOT an identity -- it already fails
/// at n = 3, s = 1, psi = 1 (8 vs 5) and n = 2, s = 2, psi = 1 (15 vs 7).
/// Kept so the tests can demonstrate the wrong reading is wrong.
std::complex<double> lemma2_rhs_constant_weight(std::int64_t n, int s, const PairFn& psi);

bool lemma2_check(std::int64_t n, int s, const PairFn& psi);

/// sum_{b=1..n^s} (b, n^s)_s e^(2 pi i b j / n^s), compensated summation.
/// n^s above 10^6 is a budget error.
std::complex<double> lemma3_lhs(std::int64_t n, int s, std::int64_t j);

/// sum over d with d^s | (j, n^s)_s of d^s Phi_s(n^s / d^s); exact.
/// j = 0 is admitted via (0, n^s)_s = n^s.
std::int64_t lemma3_rhs(std::int64_t n, int s, std::int64_t j);

/// Relative-plus-absolute tolerance used by every floating-point identity
/// check: |a - b| < 1e-6 (1 + |b|).
bool within_identity_tolerance(std::complex<double> a, std::complex<double> b);

}  // namespace menonkit
