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

#ifndef MMWPL_MODELS_HPP
#define MMWPL_MODELS_HPP

#include "mmwpl/taxonomy.hpp"

#include <optional>
#include <string_view>
#include <variant>

namespace mmwpl
{

enum class ModelFamily
{
    CI,
    CIX,
    FI,
    ABG,
    ABGX,
    CIF,
    CIFX
};

std::string_view to_string(ModelFamily family) noexcept;
std::optional<ModelFamily> parse_model_family(std::string_view token);

// Multi-frequency families need at least two carrier frequencies to fit.
bool is_multi_frequency_family(ModelFamily family) noexcept;
bool is_xpd_family(ModelFamily family) noexcept;

// Close-in free space reference distance model:
// PL = FSPL(f, 1 m) + 10 n log10(d).
struct CiParams
{
    double ple_n = 0.0;
    double sigma_db = 0.0;
    double d0_m = reference_distance_m;

    friend bool operator==(const CiParams &, const CiParams &) = default;
};

// Floating intercept: PL = alpha + 10 beta log10(d). No frequency term.
struct FiParams
{
    double alpha_db = 0.0;
    double beta_slope = 0.0;
    double sigma_db = 0.0;

    friend bool operator==(const FiParams &, const FiParams &) = default;
};

// Alpha-beta-gamma:
// PL = 10 alpha log10(d) + beta + 10 gamma log10(f / 1 GHz).
struct AbgParams
{
    double alpha_dist = 0.0;
    double beta_db = 0.0;
    double gamma_freq = 0.0;
    double sigma_db = 0.0;
    double d0_m = reference_distance_m;

    friend bool operator==(const AbgParams &, const AbgParams &) = default;
};

// Close-in with frequency weighting:
// PL = FSPL(f, 1 m) + 10 n (1 + b (f - f0) / f0) log10(d).
struct CifParams
{
    double n = 0.0;
    double b = 0.0;
    double f0_ghz = 0.0;
    double sigma_db = 0.0;
    double d0_m = reference_distance_m;

    friend bool operator==(const CifParams &, const CifParams &) = default;
};

using CoPolarizedModel = std::variant<CiParams, AbgParams, CifParams>;

// Constant cross-polarization discrimination offset on top of a frozen
// co-polarized fit (CI -> CIX, ABG -> ABGX, CIF -> CIFX).
struct XpdExtension
{
    CoPolarizedModel base;
    double xpd_db = 0.0;
    double sigma_db = 0.0;

    friend bool operator==(const XpdExtension &, const XpdExtension &) = default;
};

using FittedModel = std::variant<CiParams, FiParams, AbgParams, CifParams, XpdExtension>;

ModelFamily family_of(const FittedModel &model) noexcept;
ModelFamily family_of(const CoPolarizedModel &model) noexcept;

// Shadow fading standard deviation recorded with the model.
double sigma_of(const FittedModel &model) noexcept;

FittedModel widen(const CoPolarizedModel &model);

// Mean path loss in dB, shadow fading excluded. Throws DomainError for
// d < 1 m (enforced for FI too, although FI has no reference distance).
double predict(const FittedModel &model, Frequency frequency, double distance_m);
double predict(const CoPolarizedModel &model, Frequency frequency, double distance_m);

} // namespace mmwpl

#endif
