#include <benchmark/benchmark.h>

#include <menonkit/arith.hpp>
#include <menonkit/factor.hpp>

namespace {

void BM_FactorizeSmall(benchmark::State& state) {
  std::int64_t n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::factorize(n));
    n = n % 100'000 + 2;
  }
}
BENCHMARK(BM_FactorizeSmall);

void BM_FactorizeSemiprime(benchmark::State& state) {
  // Beyond the trial bound squared: exercises Pollard-Brent every time.
  const std::int64_t n = 1'000'003LL * 1'000'033LL;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::factorize(n));
  }
}
BENCHMARK(BM_FactorizeSemiprime);

void BM_GeneralizedGcd(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  std::int64_t a = 123'456'789, b = 987'654'321;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::generalized_gcd(a, b, s));
    ++a;
    --b;
  }
}
BENCHMARK(BM_GeneralizedGcd)->Arg(1)->Arg(2)->Arg(3);

void BM_DivisorSPowerTable(benchmark::State& state) {
  const std::int64_t m = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::DivisorSPowerTable(m, 2));
  }
}
BENCHMARK(BM_DivisorSPowerTable)->Arg(144)->Arg(44'100)->Arg(9'000'000);

}  // namespace
