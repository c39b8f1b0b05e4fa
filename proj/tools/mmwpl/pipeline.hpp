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

#ifndef MMWPL_TOOLS_PIPELINE_HPP
#define MMWPL_TOOLS_PIPELINE_HPP

#include <mmwpl/models.hpp>
#include <mmwpl/report.hpp>
#include <mmwpl/taxonomy.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mmwpl::cli
{

struct FitOptions
{
    std::vector<Environment> environments; // empty: all present
    std::vector<Layout> layouts;           // empty: all present
    std::set<ModelFamily> families;        // empty: every family the data supports
    std::optional<double> f0_ghz;
    bool campaign_only = false; // drop LOS closed-plan samples
};

// Fits every requested family per (environment, layout) scenario found in
// the data: CI and FI per single frequency on VV, VH and Combined subsets;
// CIX on VH over the VV CI; and, when two or more frequencies are present,
// multi-frequency CI/CIF/ABG on VV and Combined with CIX/CIFX/ABGX on VH.
// Explicitly requested multi-frequency families on single-frequency data
// raise NumericalError instead of being skipped.
FitReport fit_dataset(const Dataset &data, const FitOptions &options, std::string provenance);

// Single-frequency data: CI and FI. Multi-frequency data: CI, CIF and ABG.
FitReport compare_dataset(const Dataset &data, std::optional<double> f0_ghz, std::string provenance);

// Every table style that has at least one row in the report, each under a
// title line.
std::string render_all_tables(const FitReport &report);

} // namespace mmwpl::cli

#endif
