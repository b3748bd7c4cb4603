// Copyright 2026 The adfilter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "adfilter/channels.hpp"
#include "adfilter/experiments.hpp"
#include "adfilter/filter.hpp"
#include "adfilter/gates.hpp"
#include "adfilter/metrics.hpp"
#include "adfilter/scheme_a.hpp"

namespace {

void BM_ApplyFilter(benchmark::State& state) {
  const adf::DensityMatrix damped =
      adf::two_qubit_damping(adf::bell_pair(adf::BellLabel::PsiMinus), 0.4, 0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(adf::apply_filter(damped, 0.4, 0.4));
  }
}
BENCHMARK(BM_ApplyFilter);

void BM_BlockConditionalChannel(benchmark::State& state) {
  const adf::ThermalModeSpec thermal{0.125, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(adf::block_conditional_channel(0.5, thermal));
  }
}
BENCHMARK(BM_BlockConditionalChannel)->Arg(8)->Arg(12)->Arg(16);

void BM_SchemeAPipelineFigures(benchmark::State& state) {
  const adf::ThermalModeSpec thermal{0.05, 12};
  for (auto _ : state) {
    const auto channel = adf::scheme_a_filtered_pipeline(0.3, 0.3, thermal);
    benchmark::DoNotOptimize(adf::pipeline_figures(channel));
  }
}
BENCHMARK(BM_SchemeAPipelineFigures);

void BM_HaarAverageFidelity(benchmark::State& state) {
  const auto channel = adf::unfiltered_pipeline_channel(0.5);
  const adf::Operator u = adf::ms_gate();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        adf::haar_average_fidelity(channel, u, static_cast<int>(state.range(0)), 7));
  }
}
BENCHMARK(BM_HaarAverageFidelity)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
