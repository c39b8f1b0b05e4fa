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

#ifndef MMWPL_SYNTHESIS_HPP
#define MMWPL_SYNTHESIS_HPP

#include "mmwpl/models.hpp"
#include "mmwpl/taxonomy.hpp"

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace mmwpl
{

// Identifies the random stream layout. Any change to the engine, the
// uniform mapping, the normal transform or the draw order bumps the suffix.
inline constexpr std::string_view synthesis_generator = "mt19937_64+marsaglia-polar/v1";
inline constexpr std::uint64_t default_synthesis_seed = 20160515;

// Standard normal draws that are reproducible across standard libraries:
// std::mt19937_64 output is fully specified, and the uniform mapping and
// polar transform are implemented here instead of relying on
// std::normal_distribution.
class GaussianSource
{
  public:
    explicit GaussianSource(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1) from the top 53 bits of one engine output.
    double uniform();
    double standard_normal();

  private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

struct FrequencyCount
{
    Frequency frequency;
    std::size_t count;
};

struct DistanceRange
{
    double min_m = 3.9;
    double max_m = 45.9;
};

struct SynthesisSpec
{
    FittedModel model;
    // Polarization class must be VV or VH; generated samples carry it.
    ScenarioKey scenario;
    std::vector<FrequencyCount> frequencies;
    // Distances are uniform in log10(d) over [min_m, max_m].
    DistanceRange distances;
    std::uint64_t seed = default_synthesis_seed;
};

// Draws i.i.d. shadow-faded samples PL = predict(model, f, d) + N(0, sigma^2)
// where sigma is the model's own sigma_db. Frequencies are emitted in the
// order listed, `count` samples each. Identical inputs give bit-identical
// datasets.
Dataset synthesize(const SynthesisSpec &spec);

} // namespace mmwpl

#endif
