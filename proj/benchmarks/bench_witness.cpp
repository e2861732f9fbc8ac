// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <thermosemi/models.hpp>
#include <thermosemi/witness.hpp>

using namespace thermosemi;

namespace
{

void BM_BuildWitnessMode(benchmark::State &state)
{
  const Preset p = preset("plate-1d");
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(build_witness_mode(p.params, 1.0e8));
  }
}
BENCHMARK(BM_BuildWitnessMode);

void BM_WitnessSweep(benchmark::State &state)
{
  const Preset p = preset("plate-1d");
  const Spectrum spectrum = make_spectrum(p.spectrum);
  std::vector<long> indices;
  for (long n = 10; n <= state.range(0); n *= 2)
  {
    indices.push_back(n);
  }
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(witness_sweep(p.params, spectrum, indices));
  }
}
BENCHMARK(BM_WitnessSweep)->Arg(640)->Arg(10240);

}  // namespace
