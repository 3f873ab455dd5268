#include "menonkit/crsums.hpp"

#include <cmath>
#include <numbers>

#include "menonkit/arith.hpp"
#include "menonkit/checked.hpp"
#include "menonkit/totients.hpp"

namespace menonkit {

namespace {

constexpr std::int64_t kDefinitionCap = 10'000'000;
constexpr double kResidualTol = 1e-6;

void check_rs(std::int64_t r, int s, const char* who) {
  if (r < 1) throw domain_error(std::string(who) + ": r must be positive");
  if (s < 1) throw domain_error(std::string(who) + ": s must be positive");
}

}  // namespace

std::string to_string(CrsRoute route) {
  switch (route) {
    case CrsRoute::definition: return "definition";
    case CrsRoute::divisor_sum: return "divisor_sum";
    case CrsRoute::closed_form: return "closed_form";
  }
  return "?";
}

std::int64_t ramanujan_sum(std::int64_t r, std::int64_t n) {
  return cohen_ramanujan_divsum(r, 1, n);
}

CrsValue cohen_ramanujan_def(std::int64_t r, int s, std::int64_t n) {
  check_rs(r, s, "cohen_ramanujan_def");
  const std::int64_t m = checked_pow(r, s);
  if (m > kDefinitionCap) {
    throw domain_error("cohen_ramanujan_def: r^s exceeds the summation cap");
  }

  // Reduce n once so the per-term angle argument n_red * h stays well
  // inside 64 bits (both factors are below r^s <= 1e7).
  std::int64_t n_red = n % m;
  if (n_red < 0) n_red += m;

  const DivisorSPowerTable table(m, s);
  const double two_pi = 2.0 * std::numbers::pi;
  double re = 0.0, re_c = 0.0;
  double im = 0.0, im_c = 0.0;
  const auto kahan_add = [](double& sum, double& comp, double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (std::int64_t h = 1; h <= m; ++h) {
    if (table.ggcd(h) != 1) continue;
    const double angle = two_pi * (static_cast<double>((n_red * h) % m) / static_cast<double>(m));
    kahan_add(re, re_c, std::cos(angle));
    kahan_add(im, im_c, std::sin(angle));
  }

  const double rounded = std::nearbyint(re);
  const double residual = std::max(std::abs(re - rounded), std::abs(im));
  if (residual >= kResidualTol) {
    throw numeric_error("cohen_ramanujan_def: residual " + std::to_string(residual) +
                        " over tolerance");
  }
  CrsValue out;
  out.r = r;
  out.s = s;
  out.n = n;
  out.value = static_cast<std::int64_t>(rounded);
  out.route = CrsRoute::definition;
  out.residual = residual;
  return out;
}

std::int64_t cohen_ramanujan_divsum(std::int64_t r, int s, std::int64_t n) {
  check_rs(r, s, "cohen_ramanujan_divsum");
  const Factorization fr = factorize(r);
  std::int64_t sum = 0;
  for (std::int64_t d : divisors(fr)) {
    const std::int64_t ds = checked_pow(d, s);
    if (n % ds != 0) continue;  // d^s | 0 holds for every d
    const int mu = mobius(r / d);
    if (mu == 0) continue;
    sum = checked_add(sum, mu > 0 ? ds : -ds);
  }
  return sum;
}

std::int64_t cohen_ramanujan_closed(std::int64_t r, int s, std::int64_t n) {
  check_rs(r, s, "cohen_ramanujan_closed");
  const std::int64_t rs = checked_pow(r, s);
  // (0, r^s)_s = r^s, so n = 0 lands on d = 1.
  const std::int64_t g = n == 0 ? rs : generalized_gcd(n, rs, s);
  const std::int64_t ds = rs / g;
  const auto d = exact_root(ds, s);
  if (!d) {
    throw internal_error("cohen_ramanujan_closed: r^s / (n, r^s)_s is not an s-th power");
  }
  const std::int64_t phi_r = klee(rs, s);
  const std::int64_t phi_d = klee(ds, s);
  if (phi_r % phi_d != 0) {
    throw internal_error("cohen_ramanujan_closed: Phi_s(d^s) does not divide Phi_s(r^s)");
  }
  return phi_r / phi_d * mobius(*d);
}

CrsValue cohen_ramanujan(std::int64_t r, int s, std::int64_t n, CrsRoute route) {
  switch (route) {
    case CrsRoute::definition:
      return cohen_ramanujan_def(r, s, n);
    case CrsRoute::divisor_sum:
      return {r, s, n, cohen_ramanujan_divsum(r, s, n), route, 0.0};
    case CrsRoute::closed_form:
      return {r, s, n, cohen_ramanujan_closed(r, s, n), route, 0.0};
  }
  throw domain_error("cohen_ramanujan: unknown route");
}

}  // namespace menonkit
