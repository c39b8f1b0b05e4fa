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

#include "mmwpl/presets.hpp"

#include "mmwpl/errors.hpp"
#include "number_format.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace mmwpl
{

namespace
{

constexpr auto LOS = Environment::LOS;
constexpr auto NLOS = Environment::NLOS;
constexpr auto CO = Layout::Corridor;
constexpr auto OP = Layout::OpenPlan;
constexpr auto CP = Layout::ClosedPlan;
constexpr auto VV = PolarizationClass::VV;
constexpr auto VH = PolarizationClass::VH;
constexpr auto COMB = PolarizationClass::Combined;

struct SingleFrequencyRow
{
    double freq;
    PolarizationClass pol;
    Environment env;
    Layout layout;
    double ci_n, ci_sigma, fi_alpha, fi_beta, fi_sigma;
};

// Single-frequency omnidirectional CI (d0 = 1 m) and FI parameters.
constexpr SingleFrequencyRow single_frequency_rows[] = {
    {28, VV, LOS, CO, 1.1, 0.7, 63.6, 0.9, 0.6},     {28, VV, LOS, OP, 1.2, 2.3, 52.3, 2.3, 1.4},
    {28, VV, NLOS, CO, 2.5, 8.3, 40.7, 4.0, 7.5},    {28, VV, NLOS, OP, 2.5, 8.0, 38.5, 4.6, 5.7},
    {28, VV, NLOS, CP, 2.8, 10.1, 55.0, 3.3, 10.0},  {28, VH, LOS, CO, 2.4, 2.8, 76.1, 1.1, 0.2},
    {28, VH, LOS, OP, 2.8, 1.6, 66.7, 2.2, 1.1},     {28, VH, NLOS, CO, 3.2, 3.3, 58.4, 3.4, 3.3},
    {28, VH, NLOS, OP, 3.4, 4.0, 58.7, 3.7, 3.9},    {28, VH, NLOS, CP, 3.7, 10.7, 61.3, 3.8, 10.7},
    {28, COMB, LOS, CO, 1.7, 7.4, 69.8, 1.0, 7.3},   {28, COMB, LOS, OP, 2.0, 6.9, 59.5, 2.2, 6.9},
    {28, COMB, NLOS, CO, 2.8, 8.0, 51.5, 3.5, 7.8},  {28, COMB, NLOS, OP, 2.9, 7.9, 50.2, 3.9, 7.5},
    {28, COMB, NLOS, CP, 3.2, 11.8, 59.2, 3.4, 11.8}, {73, VV, LOS, CO, 1.2, 2.3, 81.4, 0.2, 0.8},
    {73, VV, LOS, OP, 1.5, 1.3, 72.5, 1.2, 1.2},     {73, VV, NLOS, CO, 3.1, 13.4, 51.2, 4.4, 13.1},
    {73, VV, NLOS, OP, 3.1, 6.8, 66.9, 3.4, 6.8},    {73, VV, NLOS, CP, 3.3, 11.7, 82.6, 2.2, 11.4},
    {73, VH, LOS, CO, 3.3, 5.9, 100.5, 0.6, 1.2},    {73, VH, LOS, OP, 4.0, 4.5, 88.5, 1.8, 2.5},
    {73, VH, NLOS, CO, 4.0, 7.5, 92.7, 2.3, 6.3},    {73, VH, NLOS, OP, 4.4, 6.8, 99.8, 1.3, 4.7},
    {73, VH, NLOS, CP, 4.7, 10.0, 99.4, 2.1, 7.5},   {73, COMB, LOS, CO, 2.2, 12.4, 91.0, 0.4, 11.7},
    {73, COMB, LOS, OP, 2.8, 11.1, 80.5, 1.5, 10.9}, {73, COMB, NLOS, CO, 3.5, 12.8, 74.0, 3.2, 12.8},
    {73, COMB, NLOS, OP, 3.6, 9.3, 84.6, 2.2, 8.8},  {73, COMB, NLOS, CP, 4.0, 13.5, 92.9, 2.0, 12.4},
};

struct CrossPolarizedRow
{
    double freq;
    Environment env;
    Layout layout;
    double n_vv, xpd, sigma;
};

// Single-frequency CIX on V-H data over the V-V CI exponent.
constexpr CrossPolarizedRow cross_polarized_rows[] = {
    {28, LOS, CO, 1.1, 14.6, 0.2}, {28, LOS, OP, 1.2, 13.3, 2.0}, {28, NLOS, CO, 2.5, 8.8, 3.9},
    {28, NLOS, OP, 2.5, 8.7, 4.7}, {28, NLOS, CP, 2.8, 11.0, 11.0}, {73, LOS, CO, 1.2, 23.8, 1.8},
    {73, LOS, OP, 1.5, 21.4, 2.6}, {73, NLOS, CO, 3.1, 12.9, 6.5}, {73, NLOS, OP, 3.1, 12.9, 5.5},
    {73, NLOS, CP, 3.3, 16.5, 8.1},
};

struct MultiFrequencyBlock
{
    Environment env;
    Layout layout;
    double ci_n, ci_sigma;
    double cix_xpd, cix_sigma;
    double cif_n, cif_b, cif_f0, cif_sigma;
    double cifx_xpd, cifx_sigma;
    double abg_alpha, abg_beta, abg_gamma, abg_sigma;
    double abgx_xpd, abgx_sigma;
};

// 28 + 73 GHz models; cross-polarized variants reuse the co-polarized fit.
constexpr MultiFrequencyBlock multi_frequency_blocks[] = {
    {LOS, CO, 1.1, 1.9, 19.2, 5.5, 1.1, 0.13, 51, 1.7, 19.2, 4.8, 0.5, 32.2, 2.4, 1.0, 18.9, 4.6},
    {LOS, OP, 1.4, 2.2, 17.3, 5.8, 1.4, 0.24, 51, 1.9, 17.3, 4.7, 1.7, 17.8, 2.7, 1.6, 17.5, 4.4},
    {NLOS, CO, 2.8, 11.8, 10.8, 7.7, 2.8, 0.22, 51, 11.2, 10.8, 5.8, 4.2, -17.2, 3.8, 10.7, 12.1, 6.4},
    {NLOS, OP, 2.8, 8.0, 10.7, 6.7, 2.8, 0.21, 49, 7.5, 10.6, 5.5, 4.1, -12.2, 3.8, 6.4, 12.3, 5.5},
    {NLOS, CP, 3.0, 11.4, 13.4, 11.2, 3.0, 0.20, 50, 10.9, 13.5, 10.1, 2.8, 6.2, 3.8, 10.8, 13.3, 9.8},
};

struct CombinedBlock
{
    Environment env;
    Layout layout;
    double ci_n, ci_sigma;
    double cif_n, cif_b, cif_f0, cif_sigma;
    double abg_alpha, abg_beta, abg_gamma, abg_sigma;
};

constexpr CombinedBlock combined_blocks[] = {
    {LOS, CO, 2.0, 10.6, 2.0, 0.30, 51, 10.2, 0.7, 22.7, 3.5, 9.8},
    {LOS, OP, 2.4, 9.8, 2.4, 0.36, 51, 9.2, 1.9, 10.1, 3.6, 9.1},
    {NLOS, CO, 3.1, 11.6, 3.1, 0.23, 51, 10.7, 3.3, -7.1, 4.2, 10.6},
    {NLOS, OP, 3.2, 9.3, 3.2, 0.23, 49, 8.6, 3.3, -1.0, 4.0, 8.4},
    {NLOS, CP, 3.6, 13.3, 3.6, 0.22, 49, 12.6, 2.8, 6.6, 4.2, 12.2},
};

struct PresetRecord
{
    int table;
    ReportEntry entry;
};

std::string preset_set(int table, std::string_view freq, const ScenarioKey &key)
{
    return "preset/v" + std::string(preset_version) + ":table" + std::to_string(table) + ":" + std::string(freq) +
           ":" + to_string(key);
}

const std::vector<PresetRecord> &records()
{
    static const std::vector<PresetRecord> all = [] {
        std::vector<PresetRecord> out;
        const std::vector<double> multi = {28.0, 73.0};

        for (const auto &r : single_frequency_rows)
        {
            const ScenarioKey key{r.env, r.layout, r.pol};
            const auto set = preset_set(3, detail::shortest(r.freq), key);
            out.push_back({3, {key, {r.freq}, CiParams{r.ci_n, r.ci_sigma}, set, 0}});
            out.push_back({3, {key, {r.freq}, FiParams{r.fi_alpha, r.fi_beta, r.fi_sigma}, set, 0}});
        }

        for (const auto &r : cross_polarized_rows)
        {
            // Base sigma is the matching V-V CI row.
            double base_sigma = 0.0;
            for (const auto &s : single_frequency_rows)
                if (s.freq == r.freq && s.pol == VV && s.env == r.env && s.layout == r.layout)
                    base_sigma = s.ci_sigma;
            const ScenarioKey key{r.env, r.layout, VH};
            out.push_back({4,
                           {key, {r.freq}, XpdExtension{CiParams{r.n_vv, base_sigma}, r.xpd, r.sigma},
                            preset_set(4, detail::shortest(r.freq), key), 0}});
        }

        for (const auto &b : multi_frequency_blocks)
        {
            const ScenarioKey co{b.env, b.layout, VV};
            const ScenarioKey cross{b.env, b.layout, VH};
            const auto co_set = preset_set(5, "multi", co);
            const auto cross_set = preset_set(5, "multi", cross);
            const CiParams ci{b.ci_n, b.ci_sigma};
            const CifParams cif{b.cif_n, b.cif_b, b.cif_f0, b.cif_sigma};
            const AbgParams abg{b.abg_alpha, b.abg_beta, b.abg_gamma, b.abg_sigma};
            out.push_back({5, {co, multi, ci, co_set, 0}});
            out.push_back({5, {cross, multi, XpdExtension{ci, b.cix_xpd, b.cix_sigma}, cross_set, 0}});
            out.push_back({5, {co, multi, cif, co_set, 0}});
            out.push_back({5, {cross, multi, XpdExtension{cif, b.cifx_xpd, b.cifx_sigma}, cross_set, 0}});
            out.push_back({5, {co, multi, abg, co_set, 0}});
            out.push_back({5, {cross, multi, XpdExtension{abg, b.abgx_xpd, b.abgx_sigma}, cross_set, 0}});
        }

        for (const auto &b : combined_blocks)
        {
            const ScenarioKey key{b.env, b.layout, COMB};
            const auto set = preset_set(6, "multi", key);
            out.push_back({6, {key, multi, CiParams{b.ci_n, b.ci_sigma}, set, 0}});
            out.push_back({6, {key, multi, CifParams{b.cif_n, b.cif_b, b.cif_f0, b.cif_sigma}, set, 0}});
            out.push_back({6, {key, multi, AbgParams{b.abg_alpha, b.abg_beta, b.abg_gamma, b.abg_sigma}, set, 0}});
        }
        return out;
    }();
    return all;
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

[[noreturn]] void bad_selector(std::string_view text, const std::string &why)
{
    throw DataError("bad-preset-selector", "preset selector '" + std::string(text) + "': " + why);
}

} // namespace

PresetSelector parse_preset_selector(std::string_view text)
{
    PresetSelector sel;
    std::vector<std::string> tokens;
    {
        std::string current;
        for (char c : text)
        {
            if (c == ':')
            {
                tokens.push_back(current);
                current.clear();
            }
            else
            {
                current += c;
            }
        }
        tokens.push_back(current);
    }

    const auto head = lower(tokens.front());
    if (head.size() != 6 || !head.starts_with("table") || head[5] < '3' || head[5] > '6')
        bad_selector(text, "must start with table3, table4, table5 or table6");
    sel.table = head[5] - '0';

    for (std::size_t i = 1; i < tokens.size(); ++i)
    {
        const auto &tok = tokens[i];
        if (tok.empty() || tok == "*")
            continue;
        if (lower(tok) == "multi")
        {
            sel.multi_frequency = true;
        }
        else if (auto pol = parse_polarization_class(tok))
        {
            sel.polarization = pol;
        }
        else if (auto env = parse_environment(tok))
        {
            sel.environment = env;
        }
        else if (auto layout = parse_layout(tok))
        {
            sel.layout = layout;
        }
        else if (auto freq = detail::parse_double(tok))
        {
            if (!(*freq > 0.0))
                bad_selector(text, "frequency must be positive");
            sel.frequency_ghz = freq;
        }
        else
        {
            const auto dash = tok.find('-');
            auto env2 = dash == std::string::npos ? std::nullopt : parse_environment(tok.substr(0, dash));
            auto layout2 = dash == std::string::npos ? std::nullopt : parse_layout(tok.substr(dash + 1));
            if (!env2 || !layout2)
                bad_selector(text, "unrecognized token '" + tok + "'");
            sel.environment = env2;
            sel.layout = layout2;
        }
    }

    const bool multi_table = sel.table == 5 || sel.table == 6;
    if (multi_table && sel.frequency_ghz)
        bad_selector(text, "tables 5 and 6 hold multi-frequency models only");
    if (!multi_table && sel.multi_frequency)
        bad_selector(text, "tables 3 and 4 hold single-frequency models only");
    return sel;
}

FitReport paper_presets()
{
    FitReport report;
    report.provenance = "presets/v" + std::string(preset_version);
    for (const auto &r : records())
        report.entries.push_back(r.entry);
    return report;
}

FitReport select_presets(const PresetSelector &sel)
{
    FitReport report;
    report.provenance = "presets/v" + std::string(preset_version) + ":table" + std::to_string(sel.table);
    for (const auto &r : records())
    {
        const auto &e = r.entry;
        if (r.table != sel.table)
            continue;
        if (sel.frequency_ghz && (e.frequencies_ghz.size() != 1 || e.frequencies_ghz.front() != *sel.frequency_ghz))
            continue;
        if (sel.polarization && e.scenario.polarization != *sel.polarization)
            continue;
        if (sel.environment && e.scenario.environment != *sel.environment)
            continue;
        if (sel.layout && e.scenario.layout != *sel.layout)
            continue;
        report.entries.push_back(e);
    }
    if (report.entries.empty())
        throw DataError("no-preset-match", "no preset entries match the selector");
    return report;
}

FitReport select_presets(std::string_view selector)
{
    return select_presets(parse_preset_selector(selector));
}

TableStyle style_for_table(int table)
{
    switch (table)
    {
    case 3:
        return TableStyle::single_frequency;
    case 4:
        return TableStyle::cross_polarized;
    case 5:
        return TableStyle::multi_frequency;
    default:
        return TableStyle::combined_multi;
    }
}

} // namespace mmwpl
