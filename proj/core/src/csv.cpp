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

#include "mmwpl/csv.hpp"

#include "mmwpl/errors.hpp"
#include "number_format.hpp"

#include <array>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

namespace mmwpl
{

namespace
{

enum Column : std::size_t
{
    col_freq,
    col_distance,
    col_path_loss,
    col_polarization,
    col_environment,
    col_layout,
    col_tx,
    col_rx,
    column_count
};

constexpr std::array<std::string_view, column_count> column_names = {
    "freq_ghz", "distance_m", "path_loss_db", "polarization", "environment", "layout", "tx_id", "rx_id"};

constexpr std::size_t absent = static_cast<std::size_t>(-1);

std::vector<std::string_view> split(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;)
    {
        const auto comma = line.find(',', start);
        fields.push_back(detail::trim(line.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

std::string at_line(std::size_t line)
{
    return "line " + std::to_string(line) + ": ";
}

double number_field(std::string_view text, std::string_view column, std::size_t line)
{
    if (auto v = detail::parse_double(text))
        return *v;
    throw DataError("unparseable-number",
                    at_line(line) + "cannot parse " + std::string(column) + " value '" + std::string(text) + "'");
}

template <class T>
T enum_field(std::optional<T> parsed, std::string_view text, std::string_view column, std::size_t line)
{
    if (parsed)
        return *parsed;
    throw DataError("unknown-token",
                    at_line(line) + "unknown " + std::string(column) + " token '" + std::string(text) + "'");
}

std::optional<std::string> optional_text(const std::vector<std::string_view> &fields, std::size_t index)
{
    if (index == absent || fields[index].empty())
        return std::nullopt;
    return std::string(fields[index]);
}

} // namespace

CsvReadResult read_csv(std::istream &source, CsvMode mode, std::string provenance)
{
    CsvReadResult result;
    result.dataset.provenance = std::move(provenance);

    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (!have_header && std::getline(source, line))
    {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF"))
            line.erase(0, 3);
        have_header = !detail::trim(line).empty();
    }
    if (!have_header)
        throw DataError("missing-header", "CSV source has no header row");

    std::array<std::size_t, column_count> index;
    index.fill(absent);
    const auto header = split(line);
    for (std::size_t i = 0; i < header.size(); ++i)
    {
        std::size_t c = 0;
        while (c < column_count && column_names[c] != header[i])
            ++c;
        if (c == column_count)
        {
            if (mode == CsvMode::strict)
                throw DataError("unknown-column", at_line(line_no) + "unknown column '" + std::string(header[i]) + "'");
            continue;
        }
        if (index[c] != absent)
            throw DataError("duplicate-column", at_line(line_no) + "duplicate column '" + std::string(header[i]) + "'");
        index[c] = i;
    }
    for (std::size_t c = col_freq; c <= col_layout; ++c)
        if (index[c] == absent)
            throw DataError("missing-header",
                            "CSV header lacks required column '" + std::string(column_names[c]) + "'");

    while (std::getline(source, line))
    {
        ++line_no;
        if (detail::trim(line).empty())
            continue;
        const auto fields = split(line);
        if (fields.size() != header.size())
            throw DataError("field-count", at_line(line_no) + "expected " + std::to_string(header.size()) +
                                               " fields, found " + std::to_string(fields.size()));

        const auto f = fields[index[col_freq]];
        const double freq = number_field(f, "freq_ghz", line_no);
        const double distance = number_field(fields[index[col_distance]], "distance_m", line_no);
        const double path_loss = number_field(fields[index[col_path_loss]], "path_loss_db", line_no);
        const auto pol_text = fields[index[col_polarization]];
        const auto env_text = fields[index[col_environment]];
        const auto layout_text = fields[index[col_layout]];
        const auto pol = enum_field(parse_polarization(pol_text), pol_text, "polarization", line_no);
        const auto env = enum_field(parse_environment(env_text), env_text, "environment", line_no);
        const auto layout = enum_field(parse_layout(layout_text), layout_text, "layout", line_no);

        std::string reason;
        if (!std::isfinite(freq) || freq <= 0.0)
        {
            reason = "non-positive or non-finite frequency";
        }
        else
        {
            PathLossSample sample{Frequency(freq), distance, path_loss, pol, env, layout,
                                  optional_text(fields, index[col_tx]), optional_text(fields, index[col_rx])};
            const auto v = validate_sample(sample);
            if (v.ok())
            {
                result.dataset.samples.push_back(std::move(sample));
                continue;
            }
            reason = v.violations.front().message;
            for (std::size_t i = 1; i < v.violations.size(); ++i)
                reason += "; " + v.violations[i].message;
        }

        if (mode == CsvMode::strict)
            throw DataError("invalid-sample", at_line(line_no) + reason);
        result.skipped.push_back({line_no, std::move(reason)});
    }
    return result;
}

void write_csv(std::ostream &sink, const Dataset &dataset)
{
    sink << csv_header << '\n';
    for (const auto &s : dataset.samples)
    {
        sink << detail::shortest(s.frequency.ghz()) << ',' << detail::shortest(s.distance_m) << ','
             << detail::shortest(s.path_loss_db) << ',' << to_string(s.polarization) << ','
             << to_string(s.environment) << ',' << to_string(s.layout) << ',' << s.tx_id.value_or("") << ','
             << s.rx_id.value_or("") << '\n';
    }
}

} // namespace mmwpl
