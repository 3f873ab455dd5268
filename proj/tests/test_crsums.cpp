#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <menonkit/crsums.hpp>
#include <menonkit/totients.hpp>

#include "oracles.hpp"

using namespace menonkit;

namespace {

std::int64_t round_oracle(std::complex<double> z) {
  REQUIRE(std::abs(z.imag()) < 1e-6);
  const double r = std::nearbyint(z.real());
  REQUIRE(std::abs(z.real() - r) < 1e-6);
  return static_cast<std::int64_t>(r);
}

}  // namespace

TEST_CASE("ramanujan sum basics") {
  CHECK(ramanujan_sum(4, 2) == -2);
  CHECK(round_oracle(oracles::crs_naive(4, 1, 2)) == -2);
  CHECK(ramanujan_sum(6, 1) == 1);  // c_r(1) = mu(r)
  CHECK(ramanujan_sum(1, 5) == 1);
  CHECK_THROWS_AS(ramanujan_sum(0, 3), domain_error);
  for (std::int64_t r = 1; r <= 200; ++r) REQUIRE(ramanujan_sum(r, 0) == euler_phi(r));
  for (std::int64_t r = 1; r <= 30; ++r) {
    for (std::int64_t n = -20; n <= 20; ++n) {
      REQUIRE(ramanujan_sum(r, n) == round_oracle(oracles::crs_naive(r, 1, n)));
    }
  }
}

TEST_CASE("definition route") {
  const CrsValue a = cohen_ramanujan_def(2, 2, 1);
  CHECK(a.value == -1);  // mu(2)
  CHECK(a.route == CrsRoute::definition);
  CHECK(a.residual < 1e-6);
  CHECK(cohen_ramanujan_def(2, 2, 0).value == 3);
  CHECK(cohen_ramanujan_def(2, 2, 4).value == 3);
  CHECK(cohen_ramanujan_def(2, 2, -4).value == 3);
  CHECK_THROWS_AS(cohen_ramanujan_def(3000, 3, 1), domain_error);  // r^s over the cap
  CHECK_THROWS_AS(cohen_ramanujan_def(0, 1, 1), domain_error);
  CHECK_THROWS_AS(cohen_ramanujan_def(2, 0, 1), domain_error);
}

TEST_CASE("divisor-sum route") {
  CHECK(cohen_ramanujan_divsum(4, 1, 2) == -2);
  CHECK(cohen_ramanujan_divsum(2, 2, 0) == 3);  // mu(2)*1 + mu(1)*4
  for (std::int64_t r = 1; r <= 500; ++r) {
    for (int s = 1; s <= 3; ++s) {
      REQUIRE(cohen_ramanujan_divsum(r, s, 1) == mobius(r));  // only d = 1 qualifies
    }
  }
}

TEST_CASE("closed-form route") {
  CHECK(cohen_ramanujan_closed(2, 2, 1) == -1);
  CHECK(cohen_ramanujan_closed(2, 2, 4) == 3);
  CHECK(cohen_ramanujan_closed(6, 1, 3) == -2);  // phi(6) mu(2) / phi(2)
  CHECK(cohen_ramanujan_divsum(6, 1, 3) == -2);
}

TEST_CASE("three routes agree") {
  for (std::int64_t r = 1; r <= 20; ++r) {
    for (int s = 1; s <= 3; ++s) {
      if (oracles::pow_int(r, s) > 10'000) continue;
      for (std::int64_t n = -40; n <= 40; ++n) {
        const std::int64_t ds = cohen_ramanujan_divsum(r, s, n);
        REQUIRE(ds == cohen_ramanujan_closed(r, s, n));
        REQUIRE(ds == cohen_ramanujan_def(r, s, n).value);
      }
    }
  }
}

TEST_CASE("evenness and periodicity") {
  for (std::int64_t r = 1; r <= 25; ++r) {
    for (int s = 1; s <= 2; ++s) {
      const std::int64_t period = oracles::pow_int(r, s);
      for (std::int64_t n = -50; n <= 50; ++n) {
        REQUIRE(cohen_ramanujan_divsum(r, s, n) == cohen_ramanujan_divsum(r, s, -n));
        REQUIRE(cohen_ramanujan_divsum(r, s, n) ==
                cohen_ramanujan_divsum(r, s, n + period));
      }
    }
  }
}

TEST_CASE("c_r^s(0) is the Cohen totient") {
  for (std::int64_t r = 1; r <= 200; ++r) {
    for (int s = 1; s <= 3; ++s) {
      REQUIRE(cohen_ramanujan_divsum(r, s, 0) == cohen_totient(r, s));
    }
  }
}

TEST_CASE("s = 1 reduction") {
  for (std::int64_t r = 1; r <= 40; ++r) {
    for (std::int64_t n = -30; n <= 30; ++n) {
      REQUIRE(cohen_ramanujan_divsum(r, 1, n) == ramanujan_sum(r, n));
    }
  }
}

TEST_CASE("route dispatcher") {
  const CrsValue v = cohen_ramanujan(6, 1, 3, CrsRoute::closed_form);
  CHECK(v.value == -2);
  CHECK(v.route == CrsRoute::closed_form);
  CHECK(v.residual == 0.0);
  CHECK(cohen_ramanujan(6, 1, 3, CrsRoute::divisor_sum).value == -2);
  CHECK(cohen_ramanujan(6, 1, 3, CrsRoute::definition).value == -2);
  CHECK(to_string(CrsRoute::definition) == "definition");
  CHECK(to_string(CrsRoute::divisor_sum) == "divisor_sum");
  CHECK(to_string(CrsRoute::closed_form) == "closed_form");
}
