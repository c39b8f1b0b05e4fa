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

#ifndef MMWPL_PRESETS_HPP
#define MMWPL_PRESETS_HPP

#include "mmwpl/report.hpp"
#include "mmwpl/taxonomy.hpp"

#include <optional>
#include <string_view>

namespace mmwpl
{

// Published parameter sets of the 28/73 GHz indoor office campaign, one
// report entry per table cell group. Bumped whenever a value changes.
inline constexpr std::string_view preset_version = "1";

// Table numbers: 3 single-frequency CI/FI, 4 single-frequency CIX,
// 5 multi-frequency co/cross models, 6 combined-polarization multi-frequency.
struct PresetSelector
{
    int table = 0;
    std::optional<double> frequency_ghz;
    bool multi_frequency = false;
    std::optional<PolarizationClass> polarization;
    std::optional<Environment> environment;
    std::optional<Layout> layout;
};

// Parses `tableN[:token]...`. Tokens may appear in any order and are
// case-insensitive: a frequency in GHz, `multi`, VV/VH/Comb, LOS/NLOS,
// CO/OP/CP, an `env-layout` pair such as `nlos-cp`, or `*`. So both
// `table3:28:VV:LOS:CO` and `table5:nlos-cp` are valid. Throws DataError
// ("bad-preset-selector") on anything else.
PresetSelector parse_preset_selector(std::string_view text);

// Every preset entry; provenance names the preset version.
FitReport paper_presets();

// Entries of one table matching the selector. Throws DataError
// ("no-preset-match") when nothing matches.
FitReport select_presets(const PresetSelector &selector);
FitReport select_presets(std::string_view selector);

TableStyle style_for_table(int table);

} // namespace mmwpl

#endif
