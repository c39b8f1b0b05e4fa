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

#include "mmwpl/models.hpp"

#include "mmwpl/errors.hpp"
#include "mmwpl/freespace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace mmwpl
{

namespace
{

template <class... Ts>
struct overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_distance(double distance_m)
{
    if (!std::isfinite(distance_m) || distance_m < reference_distance_m)
        throw DomainError("distance-domain",
                          "prediction distance must be >= 1 m, got " + std::to_string(distance_m));
}

double predict_unchecked(const CiParams &p, Frequency f, double d)
{
    return fspl_1m_db(f) + 10.0 * p.ple_n * std::log10(d / p.d0_m);
}

double predict_unchecked(const FiParams &p, Frequency, double d)
{
    return p.alpha_db + 10.0 * p.beta_slope * std::log10(d);
}

double predict_unchecked(const AbgParams &p, Frequency f, double d)
{
    return 10.0 * p.alpha_dist * std::log10(d / p.d0_m) + p.beta_db + 10.0 * p.gamma_freq * std::log10(f.ghz());
}

double predict_unchecked(const CifParams &p, Frequency f, double d)
{
    const double weight = 1.0 + p.b * (f.ghz() - p.f0_ghz) / p.f0_ghz;
    return fspl_1m_db(f) + 10.0 * p.n * weight * std::log10(d / p.d0_m);
}

double predict_unchecked(const CoPolarizedModel &m, Frequency f, double d)
{
    return std::visit([&](const auto &p) { return predict_unchecked(p, f, d); }, m);
}

double predict_unchecked(const XpdExtension &x, Frequency f, double d)
{
    return predict_unchecked(x.base, f, d) + x.xpd_db;
}

} // namespace

std::string_view to_string(ModelFamily family) noexcept
{
    switch (family)
    {
    case ModelFamily::CI:
        return "CI";
    case ModelFamily::CIX:
        return "CIX";
    case ModelFamily::FI:
        return "FI";
    case ModelFamily::ABG:
        return "ABG";
    case ModelFamily::ABGX:
        return "ABGX";
    case ModelFamily::CIF:
        return "CIF";
    case ModelFamily::CIFX:
        return "CIFX";
    }
    return "?";
}

std::optional<ModelFamily> parse_model_family(std::string_view token)
{
    std::string t(token);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (auto f : {ModelFamily::CI, ModelFamily::CIX, ModelFamily::FI, ModelFamily::ABG, ModelFamily::ABGX,
                   ModelFamily::CIF, ModelFamily::CIFX})
        if (t == to_string(f))
            return f;
    return std::nullopt;
}

bool is_multi_frequency_family(ModelFamily family) noexcept
{
    return family == ModelFamily::ABG || family == ModelFamily::ABGX || family == ModelFamily::CIF ||
           family == ModelFamily::CIFX;
}

bool is_xpd_family(ModelFamily family) noexcept
{
    return family == ModelFamily::CIX || family == ModelFamily::ABGX || family == ModelFamily::CIFX;
}

ModelFamily family_of(const CoPolarizedModel &model) noexcept
{
    return std::visit(overloaded{
                          [](const CiParams &) { return ModelFamily::CI; },
                          [](const AbgParams &) { return ModelFamily::ABG; },
                          [](const CifParams &) { return ModelFamily::CIF; },
                      },
                      model);
}

ModelFamily family_of(const FittedModel &model) noexcept
{
    return std::visit(overloaded{
                          [](const CiParams &) { return ModelFamily::CI; },
                          [](const FiParams &) { return ModelFamily::FI; },
                          [](const AbgParams &) { return ModelFamily::ABG; },
                          [](const CifParams &) { return ModelFamily::CIF; },
                          [](const XpdExtension &x) {
                              switch (family_of(x.base))
                              {
                              case ModelFamily::ABG:
                                  return ModelFamily::ABGX;
                              case ModelFamily::CIF:
                                  return ModelFamily::CIFX;
                              default:
                                  return ModelFamily::CIX;
                              }
                          },
                      },
                      model);
}

double sigma_of(const FittedModel &model) noexcept
{
    return std::visit([](const auto &p) { return p.sigma_db; }, model);
}

FittedModel widen(const CoPolarizedModel &model)
{
    return std::visit([](const auto &p) -> FittedModel { return p; }, model);
}

double predict(const FittedModel &model, Frequency frequency, double distance_m)
{
    check_distance(distance_m);
    return std::visit([&](const auto &p) { return predict_unchecked(p, frequency, distance_m); }, model);
}

double predict(const CoPolarizedModel &model, Frequency frequency, double distance_m)
{
    check_distance(distance_m);
    return predict_unchecked(model, frequency, distance_m);
}

} // namespace mmwpl
