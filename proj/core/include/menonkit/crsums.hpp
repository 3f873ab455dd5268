#pragma once

#include <cstdint>
#include <string>

#include "menonkit/errors.hpp"

namespace menonkit {

enum class CrsRoute { definition, divisor_sum, closed_form };

std::string to_string(CrsRoute route);

/// One evaluated (Cohen-)Ramanujan sum. residual is meaningful only for the
/// definition route: the distance of the accumulated complex sum from the
/// rounded integer it was accepted as. The other routes are exact and
/// report residual 0.
struct CrsValue {
  std::int64_t r = 1;
  int s = 1;
  std::int64_t n = 0;
  std::int64_t value = 0;
  CrsRoute route = CrsRoute::divisor_sum;
  double residual = 0.0;
};

/// Classical Ramanujan sum c_r(n): the s = 1 divisor-sum route.
/// c_r(0) = phi(r), c_r(1) = mu(r).
std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n);

/// Cohen-Ramanujan sum c_r^s(n) straight from the definition:
/// sum of e^(2 pi i n h / r^s) over 1 <= h <= r^s with (h, r^s)_s = 1.
///
/// Complex double arithmetic with compensated summation; the imaginary
/// part and the distance to the nearest integer must both come out below
/// 1e-6 or a numeric_error is thrown (that would be an implementation bug,
/// not bad input). O(r^s); r^s above 10^7 is a domain error. This route
/// exists to validate the exact ones, never as the source of record.
CrsValue cohen_ramanujan_def(std::int64_t r, int s, std::int64_t n);

/// Exact integer route: c_r^s(n) = sum_{d | r, d^s | n} mu(r/d) d^s.
/// d^s | 0 holds for every d; negative n is handled by magnitude, which
/// matches the definition's evenness in n.
std::int64_t cohen_ramanujan_divsum(std::int64_t r, int s, std::int64_t n);

/// Exact closed form: c_r^s(n) = Phi_s(r^s) mu(d) / Phi_s(d^s) where
/// d^s = r^s / (n, r^s)_s. d is recovered by an exact integer root, and
/// Phi_s(d^s) | Phi_s(r^s) is asserted before dividing; either failing
/// would falsify the formula and raises internal_error.
std::int64_t cohen_ramanujan_closed(std::int64_t r, int s, std::int64_t n);

/// Route dispatcher used by the CLI and the sweep engine.
CrsValue cohen_ramanujan(std::int64_t r, int s, std::int64_t n, CrsRoute route);

}  // namespace menonkit
