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

#ifndef MMWPL_REPORT_HPP
#define MMWPL_REPORT_HPP

#include "mmwpl/models.hpp"
#include "mmwpl/taxonomy.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmwpl
{

// One fitted (or published) model together with the data it describes.
struct ReportEntry
{
    ScenarioKey scenario;
    // Sorted distinct carrier frequencies of the training set; one value
    // for single-frequency models.
    std::vector<double> frequencies_ghz;
    FittedModel model;
    // Identity of the training sample set. Delta-sigma pairs CI and FI
    // entries only when these match.
    std::string sample_set;
    std::size_t sample_count = 0;

    bool is_multi_frequency() const noexcept { return frequencies_ghz.size() > 1; }
};

struct FitReport
{
    std::string provenance;
    std::vector<ReportEntry> entries;
};

// Content fingerprint of a dataset's samples ("fnv1a64:<16 hex digits>").
std::string sample_set_id(const Dataset &data);

ReportEntry make_entry(const ScenarioKey &scenario, const Dataset &training, FittedModel model);

// sigma_CI - sigma_FI for two fits of one sample set. Throws DataError
// ("mismatched-sample-sets") when the sets differ or the families are not
// CI and FI, and NumericalError ("internal-consistency") when the result is
// below -0.05 dB, which FI's nesting of CI rules out.
double delta_sigma(const ReportEntry &ci, const ReportEntry &fi);

// Delta-sigma for an FI entry whose CI partner is present in the report.
std::optional<double> paired_delta_sigma(const FitReport &report, const ReportEntry &fi);

enum class TableStyle
{
    single_frequency, // CI and FI with delta-sigma per frequency and scenario
    cross_polarized,  // single-frequency CIX
    multi_frequency,  // CI/CIX, CIF/CIFX, ABG/ABGX per scenario
    combined_multi    // combined-polarization multi-frequency CI, CIF, ABG
};

std::string_view to_string(TableStyle style) noexcept;

// Fixed-width text table, columns separated by " | ". Rows appear only for
// scenarios present in the report; absent cells print "-". Precision:
// PLE, n, alpha, beta, gamma 0.1; b 0.01; f0 whole GHz; sigma, XPD and
// delta-sigma 0.1 dB.
std::string render_table(const FitReport &report, TableStyle style);

// Decimal rounding half away from zero applied to the shortest round-trip
// text of the value, so 0.25 -> "0.3" and 1.15 -> "1.2". Negative zero
// prints without a sign.
std::string format_fixed(double value, int decimals);

} // namespace mmwpl

#endif
