#include <benchmark/benchmark.h>

#include "permtop/finite_group.hpp"
#include "permtop/finite_oracle.hpp"

using namespace permtop;

static void BM_MinNeighborhoods(benchmark::State &state, const char *spec)
{
  FiniteGroup G = FiniteGroup::symmetric(static_cast<std::size_t>(state.range(0)));
  auto family = generate_subbase(G, SubbaseSpec::parse(spec));
  for (auto _ : state)
    benchmark::DoNotOptimize(min_neighborhoods(G, family));
}
BENCHMARK_CAPTURE(BM_MinNeighborhoods, tp, "tp")->Arg(4)->Arg(5);
BENCHMARK_CAPTURE(BM_MinNeighborhoods, cent, "cent")->Arg(4)->Arg(5);

static void BM_GenerateZariski(benchmark::State &state)
{
  FiniteGroup G = FiniteGroup::symmetric(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(generate_subbase(G, SubbaseSpec::parse("zariski:2")));
}
BENCHMARK(BM_GenerateZariski)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
