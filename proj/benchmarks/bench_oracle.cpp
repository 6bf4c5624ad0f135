#include <benchmark/benchmark.h>

#include "rumor/oracle.hpp"

namespace {

using namespace rumor;

void BM_EnumerateFpTail(benchmark::State& state) {
  const auto dist = parse_distribution("finite:0.5,0.3,0.2");
  const auto n = static_cast<index_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_fp_tail(dist, n));
}
BENCHMARK(BM_EnumerateFpTail)->DenseRange(2, 8, 2);

void BM_EnumerateSiteInformed(benchmark::State& state) {
  const auto dist = parse_distribution("finite:0.4,0.1,0.1,0.4");
  const auto n = static_cast<index_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_site_informed(dist, n, Model::rfp));
}
BENCHMARK(BM_EnumerateSiteInformed)->Arg(4)->Arg(6);

}  // namespace
