// SPDX-License-Identifier: Apache-2.0
//
// mmwpl - indoor mmWave path loss model fitting library
// Copyright (C) 2026 The mmwpl authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <mmwpl/estimators.hpp>
#include <mmwpl/synthesis.hpp>

#include <benchmark/benchmark.h>

using namespace mmwpl;

namespace
{

Dataset make_data(std::size_t per_frequency)
{
    SynthesisSpec spec{CifParams{3.0, 0.2, 50, 8.0},
                       ScenarioKey{Environment::NLOS, Layout::ClosedPlan, PolarizationClass::VV},
                       {FrequencyCount{Frequency(28), per_frequency}, FrequencyCount{Frequency(73), per_frequency}},
                       {},
                       default_synthesis_seed};
    return synthesize(spec);
}

void BM_FitCi(benchmark::State &state)
{
    const auto data = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_ci(data));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}

void BM_FitAbg(benchmark::State &state)
{
    const auto data = make_data(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_abg(data));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}

void BM_FitCif(benchmark::State &state)
{
    const auto data = make_data(static_cast<std::size_t>(state.range(0)));
    const double f0 = compute_f0(data);
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_cif(data, f0));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(data.size()));
}

void BM_Synthesize(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(make_data(n));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n));
}

} // namespace

BENCHMARK(BM_FitCi)->Range(64, 1 << 16);
BENCHMARK(BM_FitAbg)->Range(64, 1 << 16);
BENCHMARK(BM_FitCif)->Range(64, 1 << 16);
BENCHMARK(BM_Synthesize)->Range(64, 1 << 16);
BENCHMARK_MAIN();
