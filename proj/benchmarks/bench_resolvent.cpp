// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <thermosemi/models.hpp>
#include <thermosemi/resolvent.hpp>

using namespace thermosemi;

namespace
{

void BM_ModeResolventLowerBound(benchmark::State &state)
{
  const Preset p = preset("plate-1d");
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(mode_resolvent_norm_lb(p.params, 1.0e4, 1.0e4, K));
  }
}
BENCHMARK(BM_ModeResolventLowerBound)->Arg(4)->Arg(16)->Arg(64);

void BM_SolveModeResolvent(benchmark::State &state)
{
  const Preset p = preset("plate-1d");
  ModeForcing F;
  F.f2 = 1.0;
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(solve_mode_resolvent(p.params, 1.0e4, 1.0e4, F));
  }
}
BENCHMARK(BM_SolveModeResolvent);

void BM_ResolventScan(benchmark::State &state)
{
  const Preset p = preset("plate-1d");
  const Spectrum spectrum = make_spectrum(p.spectrum);
  std::vector<double> lambdas;
  for (int i = 0; i < 8; i++)
  {
    lambdas.push_back(std::pow(10.0, 1.0 + 0.5 * i));
  }
  const long n_max = state.range(0);
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(resolvent_scan(p.params, spectrum, lambdas, 8, n_max));
  }
}
BENCHMARK(BM_ResolventScan)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
