#include <benchmark/benchmark.h>

#include "permtop/selfnorm.hpp"

using namespace permtop;

static void BM_Certify(benchmark::State &state)
{
  ThinSet A = ThinSet::powers_of_two();
  SDElement h{FreeWord::reduce({{4, 1}, {3, -1}, {8, 2}}), state.range(0)};
  for (auto _ : state)
    benchmark::DoNotOptimize(self_normalizing_certify(h, A, 10));
}
BENCHMARK(BM_Certify)->Arg(0)->Arg(1);

static void BM_CertifyInSubgroup(benchmark::State &state)
{
  ThinSet A = ThinSet::squares();
  SDElement h{FreeWord::reduce({{4, 1}, {9, -1}, {16, 2}, {1, 1}}), 0};
  for (auto _ : state)
    benchmark::DoNotOptimize(self_normalizing_certify(h, A, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CertifyInSubgroup)->Arg(4)->Arg(16);
