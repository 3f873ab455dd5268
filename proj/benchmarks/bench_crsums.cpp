#include <benchmark/benchmark.h>

#include <menonkit/crsums.hpp>

namespace {

void BM_CrsDivisorSum(benchmark::State& state) {
  std::int64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::cohen_ramanujan_divsum(60, 2, n));
    n = (n + 1) % 3600;
  }
}
BENCHMARK(BM_CrsDivisorSum);

void BM_CrsClosedForm(benchmark::State& state) {
  std::int64_t n = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::cohen_ramanujan_closed(60, 2, n));
    n = (n + 1) % 3600;
  }
}
BENCHMARK(BM_CrsClosedForm);

void BM_CrsDefinition(benchmark::State& state) {
  // O(r^s) complex summation; r^s here is state.range(0).
  const std::int64_t r = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::cohen_ramanujan_def(r, 2, 17));
  }
  state.SetItemsProcessed(state.iterations() * r * r);
}
BENCHMARK(BM_CrsDefinition)->Arg(30)->Arg(100)->Arg(316)->Unit(benchmark::kMicrosecond);

}  // namespace
