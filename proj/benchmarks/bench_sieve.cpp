#include <benchmark/benchmark.h>

#include <menonkit/totients.hpp>

namespace {

void BM_SieveBuild(benchmark::State& state) {
  const std::int64_t bound = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::build_sieve(bound));
  }
  state.SetItemsProcessed(state.iterations() * bound);
}
BENCHMARK(BM_SieveBuild)->RangeMultiplier(10)->Range(100'000, 10'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_BatchEval(benchmark::State& state) {
  const std::int64_t bound = 100'000;
  const menonkit::SieveTables tables = menonkit::build_sieve(bound);
  const auto fn = static_cast<menonkit::BatchFn>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tables.batch_eval(fn, 2, 1, bound));
  }
  state.SetItemsProcessed(state.iterations() * bound);
}
BENCHMARK(BM_BatchEval)
    ->Arg(static_cast<int>(menonkit::BatchFn::mobius))
    ->Arg(static_cast<int>(menonkit::BatchFn::jordan))
    ->Arg(static_cast<int>(menonkit::BatchFn::klee))
    ->Unit(benchmark::kMillisecond);

void BM_PointKlee(benchmark::State& state) {
  std::int64_t n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::klee(n, 2));
    n = n % 100'000 + 2;
  }
}
BENCHMARK(BM_PointKlee);

}  // namespace
