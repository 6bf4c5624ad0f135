#include <benchmark/benchmark.h>

#include "rumor/firework.hpp"
#include "rumor/reverse_firework.hpp"

namespace {

using namespace rumor;

void BM_SimulateFp(benchmark::State& state) {
  const RadiusSampler sampler(RadiusDistribution::frac(2));
  const auto horizon = static_cast<index_t>(state.range(0));
  RandomStream stream(1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_fp(sampler, horizon, stream));
}
BENCHMARK(BM_SimulateFp)->Arg(100)->Arg(10'000);

void BM_SimulateFpStages(benchmark::State& state) {
  const RadiusSampler sampler(RadiusDistribution::frac(2));
  const auto horizon = static_cast<index_t>(state.range(0));
  RandomStream stream(1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_fp_stages(sampler, horizon, stream));
}
BENCHMARK(BM_SimulateFpStages)->Arg(100)->Arg(10'000);

void BM_RfpCount(benchmark::State& state) {
  const RadiusSampler sampler(RadiusDistribution::frac(2));
  const auto n = static_cast<index_t>(state.range(0));
  RandomStream stream(1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_rfp_count(sampler, n, stream));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RfpCount)->Arg(10'000)->Arg(1'000'000);

void BM_HChainShared(benchmark::State& state) {
  const RadiusSampler sampler(RadiusDistribution::frac(2));
  RandomStream stream(1);
  const UniformTable table = make_uniform_table(-39, 40, stream);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_h_chain(sampler, -40, 40, table));
}
BENCHMARK(BM_HChainShared);

}  // namespace
