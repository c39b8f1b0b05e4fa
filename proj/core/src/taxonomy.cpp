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

#include "mmwpl/taxonomy.hpp"

#include "mmwpl/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace mmwpl
{

std::string_view to_string(ErrorClass c)
{
    switch (c)
    {
    case ErrorClass::domain:
        return "domain";
    case ErrorClass::data:
        return "data";
    case ErrorClass::numerical:
        return "numerical";
    }
    return "unknown";
}

Frequency::Frequency(double ghz) : ghz_(ghz)
{
    if (!std::isfinite(ghz) || ghz <= 0.0)
        throw DomainError("frequency-domain", "frequency must be finite and > 0 GHz, got " + std::to_string(ghz));
}

ValidationResult validate_sample(const PathLossSample &sample)
{
    ValidationResult r;
    const double f = sample.frequency.ghz();
    if (!std::isfinite(f) || f <= 0.0)
        r.violations.push_back({"frequency", "non-positive or non-finite frequency"});

    if (!std::isfinite(sample.distance_m))
        r.violations.push_back({"distance", "non-finite distance"});
    else if (sample.distance_m < reference_distance_m)
        r.violations.push_back({"distance", "distance below 1 m reference"});

    if (!std::isfinite(sample.path_loss_db))
        r.violations.push_back({"path-loss", "non-finite path loss"});
    else if (sample.path_loss_db <= 0.0)
        r.violations.push_back({"path-loss", "non-positive path loss"});
    return r;
}

bool matches(PolarizationClass cls, Polarization pol) noexcept
{
    switch (cls)
    {
    case PolarizationClass::VV:
        return pol == Polarization::VV;
    case PolarizationClass::VH:
        return pol == Polarization::VH;
    case PolarizationClass::Combined:
        return true;
    }
    return false;
}

Dataset partition_by_scenario(const Dataset &dataset, const ScenarioKey &key)
{
    Dataset out;
    out.provenance = dataset.provenance.empty() ? to_string(key) : dataset.provenance + "/" + to_string(key);
    std::copy_if(dataset.samples.begin(), dataset.samples.end(), std::back_inserter(out.samples),
                 [&](const PathLossSample &s) {
                     return s.environment == key.environment && s.layout == key.layout &&
                            matches(key.polarization, s.polarization);
                 });
    return out;
}

bool is_campaign_measured(Environment env, Layout layout) noexcept
{
    return !(env == Environment::LOS && layout == Layout::ClosedPlan);
}

std::vector<ScenarioKey> paper_scenario_set()
{
    constexpr std::pair<Environment, Layout> pairs[] = {
        {Environment::LOS, Layout::Corridor},   {Environment::LOS, Layout::OpenPlan},
        {Environment::NLOS, Layout::Corridor},  {Environment::NLOS, Layout::OpenPlan},
        {Environment::NLOS, Layout::ClosedPlan},
    };
    std::vector<ScenarioKey> keys;
    keys.reserve(15);
    for (auto [env, layout] : pairs)
        for (auto cls : {PolarizationClass::VV, PolarizationClass::VH, PolarizationClass::Combined})
            keys.push_back({env, layout, cls});
    return keys;
}

std::vector<Frequency> distinct_frequencies(const Dataset &dataset)
{
    std::vector<Frequency> out;
    for (const auto &s : dataset.samples)
        out.push_back(s.frequency);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string_view to_string(Environment env) noexcept
{
    return env == Environment::LOS ? "LOS" : "NLOS";
}

std::string_view to_string(Layout layout) noexcept
{
    switch (layout)
    {
    case Layout::Corridor:
        return "CO";
    case Layout::OpenPlan:
        return "OP";
    case Layout::ClosedPlan:
        return "CP";
    }
    return "?";
}

std::string_view to_string(Polarization pol) noexcept
{
    return pol == Polarization::VV ? "VV" : "VH";
}

std::string_view to_string(PolarizationClass cls) noexcept
{
    switch (cls)
    {
    case PolarizationClass::VV:
        return "VV";
    case PolarizationClass::VH:
        return "VH";
    case PolarizationClass::Combined:
        return "Comb";
    }
    return "?";
}

std::string to_string(const ScenarioKey &key)
{
    std::string s(to_string(key.environment));
    s += ':';
    s += to_string(key.layout);
    s += ':';
    s += to_string(key.polarization);
    return s;
}

namespace
{
std::string upper(std::string_view token)
{
    std::string s(token);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}
} // namespace

std::optional<Environment> parse_environment(std::string_view token)
{
    const auto t = upper(token);
    if (t == "LOS")
        return Environment::LOS;
    if (t == "NLOS")
        return Environment::NLOS;
    return std::nullopt;
}

std::optional<Layout> parse_layout(std::string_view token)
{
    const auto t = upper(token);
    if (t == "CO" || t == "CORRIDOR")
        return Layout::Corridor;
    if (t == "OP" || t == "OPENPLAN" || t == "OPEN-PLAN")
        return Layout::OpenPlan;
    if (t == "CP" || t == "CLOSEDPLAN" || t == "CLOSED-PLAN")
        return Layout::ClosedPlan;
    return std::nullopt;
}

std::optional<Polarization> parse_polarization(std::string_view token)
{
    const auto t = upper(token);
    if (t == "VV" || t == "V-V")
        return Polarization::VV;
    if (t == "VH" || t == "V-H")
        return Polarization::VH;
    return std::nullopt;
}

std::optional<PolarizationClass> parse_polarization_class(std::string_view token)
{
    if (auto p = parse_polarization(token))
        return *p == Polarization::VV ? PolarizationClass::VV : PolarizationClass::VH;
    const auto t = upper(token);
    if (t == "COMB" || t == "COMB." || t == "COMBINED")
        return PolarizationClass::Combined;
    return std::nullopt;
}

} // namespace mmwpl
