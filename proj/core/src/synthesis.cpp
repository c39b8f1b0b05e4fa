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

#include "mmwpl/synthesis.hpp"

#include "mmwpl/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mmwpl
{

double GaussianSource::uniform()
{
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianSource::standard_normal()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do
    {
        u = 2.0 * uniform() - 1.0;
        v = 2.0 * uniform() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double factor = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * factor;
    has_spare_ = true;
    return u * factor;
}

Dataset synthesize(const SynthesisSpec &spec)
{
    const auto &range = spec.distances;
    if (!std::isfinite(range.min_m) || !std::isfinite(range.max_m) || range.min_m < reference_distance_m)
        throw DomainError("distance-domain", "synthesize: distance range must start at or beyond 1 m");
    if (range.max_m < range.min_m)
        throw DomainError("distance-domain", "synthesize: distance range max is below min");
    if (spec.frequencies.empty())
        throw DataError("empty-spec", "synthesize: no frequencies requested");
    for (const auto &fc : spec.frequencies)
        if (fc.count == 0)
            throw DataError("empty-spec", "synthesize: per-frequency sample counts must be > 0");
    if (spec.scenario.polarization == PolarizationClass::Combined)
        throw DataError("combined-polarization",
                        "synthesize: scenario polarization must be VV or VH; synthesize each and concatenate");

    const Polarization pol =
        spec.scenario.polarization == PolarizationClass::VV ? Polarization::VV : Polarization::VH;
    const double sigma = sigma_of(spec.model);
    const double log_min = std::log10(range.min_m);
    const double log_span = std::log10(range.max_m) - log_min;

    GaussianSource rng(spec.seed);
    Dataset out;
    out.provenance = std::string("synth:") + std::string(synthesis_generator) + ":seed=" + std::to_string(spec.seed);
    for (const auto &fc : spec.frequencies)
    {
        for (std::size_t i = 0; i < fc.count; ++i)
        {
            double d = std::pow(10.0, log_min + log_span * rng.uniform());
            // pow may land a hair outside the closed range; clamp to it.
            d = std::min(std::max(d, range.min_m), range.max_m);
            const double shadow = sigma * rng.standard_normal();
            out.samples.push_back({fc.frequency, d, predict(spec.model, fc.frequency, d) + shadow, pol,
                                   spec.scenario.environment, spec.scenario.layout, std::nullopt, std::nullopt});
        }
    }
    return out;
}

} // namespace mmwpl
