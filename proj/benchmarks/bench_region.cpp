// Copyright The thermosemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <thermosemi/region.hpp>

using namespace thermosemi;

namespace
{

void BM_RegionTable(benchmark::State &state)
{
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state)
  {
    benchmark::DoNotOptimize(region_table(points));
  }
}
BENCHMARK(BM_RegionTable)->Arg(101)->Arg(401)->Unit(benchmark::kMillisecond);

}  // namespace
