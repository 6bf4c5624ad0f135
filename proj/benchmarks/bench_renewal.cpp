#include <benchmark/benchmark.h>

#include "rumor/renewal.hpp"

namespace {

using namespace rumor;

void BM_RenewalSequence(benchmark::State& state) {
  const auto dist = RadiusDistribution::frac(2);
  const auto n = static_cast<index_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(renewal_sequence(dist, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_RenewalSequence)->RangeMultiplier(4)->Range(256, 16384)->Complexity(benchmark::oNSquared);

void BM_MuSigma(benchmark::State& state) {
  const auto dist = RadiusDistribution::powratio(4);
  for (auto _ : state) benchmark::DoNotOptimize(mu_sigma(dist, 1e-9));
}
BENCHMARK(BM_MuSigma);

}  // namespace
