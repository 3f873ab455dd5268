#include <benchmark/benchmark.h>

#include <menonkit/identities.hpp>
#include <menonkit/verify.hpp>

namespace {

void BM_MenonSLhs(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::menon_s_lhs(n, 2));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_MenonSLhs)->Arg(60)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_MenonGeneralLhs(benchmark::State& state) {
  const std::int64_t a[] = {1, 5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::menon_general_lhs(12, 2, a, 2));
  }
}
BENCHMARK(BM_MenonGeneralLhs)->Unit(benchmark::kMicrosecond);

void BM_VerifyMenonSweep(benchmark::State& state) {
  menonkit::SweepDomain d;
  d.n_max = state.range(0);
  d.s_min = 1;
  d.s_max = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::verify(menonkit::IdentityId::menon_s, d, 0));
  }
  state.SetItemsProcessed(state.iterations() * d.n_max);
}
BENCHMARK(BM_VerifyMenonSweep)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Lemma3Pair(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(menonkit::lemma3_lhs(n, 2, 7));
    benchmark::DoNotOptimize(menonkit::lemma3_rhs(n, 2, 7));
  }
}
BENCHMARK(BM_Lemma3Pair)->Arg(10)->Arg(30)->Unit(benchmark::kMicrosecond);

}  // namespace
