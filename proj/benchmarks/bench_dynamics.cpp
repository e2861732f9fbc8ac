// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <thermosemi/dynamics.hpp>
#include <thermosemi/models.hpp>

using namespace thermosemi;

namespace
{

void BM_Simulate(benchmark::State &state)
{
  const Preset p = preset("plate-1d");
  const Spectrum spectrum = make_spectrum(p.spectrum);
  SimulationSetup setup;
  setup.n_modes = state.range(0);
  setup.horizon = 5.0;
  setup.steps_per_delay = 32;
  for (long n = 1; n <= setup.n_modes; n++)
  {
    const double mu = spectrum.eigenvalue(static_cast<std::size_t>(n));
    setup.initial.push_back({1.0 / (static_cast<double>(n) * std::sqrt(mu)), 0.0, 0.0});
  }
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(simulate(p.params, spectrum, setup));
  }
}
BENCHMARK(BM_Simulate)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
