#include <benchmark/benchmark.h>

#include "permtop/residue_perm.hpp"
#include "permtop/sampling.hpp"
#include "permtop/tbeta.hpp"

using namespace permtop;

static void BM_Compose(benchmark::State &state)
{
  Sampler s(1);
  ResiduePerm f = s.residue_perm(state.range(0));
  ResiduePerm g = s.residue_perm(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(8)->Arg(24);

static void BM_Inverse(benchmark::State &state)
{
  Sampler s(2);
  ResiduePerm f = s.residue_perm(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(inverse(f));
}
BENCHMARK(BM_Inverse)->Arg(2)->Arg(8)->Arg(24);

static void BM_EPSetImage(benchmark::State &state)
{
  Sampler s(3);
  ResiduePerm f = s.residue_perm(state.range(0));
  EPSet u = s.epset(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(image(f, u));
}
BENCHMARK(BM_EPSetImage)->Arg(4)->Arg(8);
