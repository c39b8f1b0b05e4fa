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

#ifndef MMWPL_CSV_HPP
#define MMWPL_CSV_HPP

#include "mmwpl/taxonomy.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mmwpl
{

// Bulk sample exchange format. The header row is mandatory; columns are
// matched by name, tx_id and rx_id may be omitted or left empty. Fields
// are plain comma separated values (no quoting), '.' decimal point.
inline constexpr std::string_view csv_header =
    "freq_ghz,distance_m,path_loss_db,polarization,environment,layout,tx_id,rx_id";

enum class CsvMode
{
    strict, // unknown columns and invalid samples abort the read
    lax     // unknown columns ignored, invalid samples skipped and reported
};

struct SkippedRow
{
    std::size_t line; // 1-based line number in the source, header is line 1
    std::string reason;
};

struct CsvReadResult
{
    Dataset dataset;
    std::vector<SkippedRow> skipped;
};

// Throws DataError for a missing header, missing required columns, bad
// field counts, unparseable numbers or unknown enum tokens in either mode.
CsvReadResult read_csv(std::istream &source, CsvMode mode, std::string provenance = {});

// Writes the canonical header and one row per sample, numbers in shortest
// round-trip form.
void write_csv(std::ostream &sink, const Dataset &dataset);

} // namespace mmwpl

#endif
