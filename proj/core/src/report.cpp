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

#include "mmwpl/report.hpp"

#include "mmwpl/errors.hpp"
#include "number_format.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <map>
#include <tuple>

namespace mmwpl
{

namespace
{

class Fnv1a
{
  public:
    void add(std::uint64_t word)
    {
        for (int i = 0; i < 8; ++i)
        {
            hash_ ^= (word >> (8 * i)) & 0xffu;
            hash_ *= 0x100000001b3ull;
        }
    }
    void add(double value) { add(std::bit_cast<std::uint64_t>(value)); }
    std::uint64_t value() const { return hash_; }

  private:
    std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

std::string_view pol_label(PolarizationClass cls)
{
    switch (cls)
    {
    case PolarizationClass::VV:
        return "V-V";
    case PolarizationClass::VH:
        return "V-H";
    case PolarizationClass::Combined:
        return "Comb.";
    }
    return "?";
}

std::string_view layout_label(Layout layout)
{
    switch (layout)
    {
    case Layout::Corridor:
        return "co";
    case Layout::OpenPlan:
        return "op";
    case Layout::ClosedPlan:
        return "cp";
    }
    return "?";
}

std::string frequency_label(const std::vector<double> &freqs)
{
    std::string s;
    for (std::size_t i = 0; i < freqs.size(); ++i)
    {
        if (i)
            s += '/';
        s += detail::shortest(freqs[i]);
    }
    return s;
}

const std::string dash = "-";

std::string one_dp(double v)
{
    return format_fixed(v, 1);
}

using Row = std::vector<std::string>;

std::string layout_table(const Row &header, const std::vector<Row> &rows)
{
    std::vector<std::size_t> width(header.size(), 0);
    auto widen = [&](const Row &r) {
        for (std::size_t c = 0; c < r.size(); ++c)
            width[c] = std::max(width[c], r[c].size());
    };
    widen(header);
    for (const auto &r : rows)
        widen(r);

    auto emit = [&](const Row &r) {
        std::string line;
        for (std::size_t c = 0; c < r.size(); ++c)
        {
            if (c)
                line += " | ";
            line += r[c];
            line.append(width[c] - r[c].size(), ' ');
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        return line + '\n';
    };

    std::string out = emit(header);
    std::string rule;
    for (std::size_t c = 0; c < width.size(); ++c)
    {
        if (c)
            rule += "-+-";
        rule.append(width[c], '-');
    }
    out += rule + '\n';
    for (const auto &r : rows)
        out += emit(r);
    return out;
}

int multi_family_rank(ModelFamily f)
{
    switch (f)
    {
    case ModelFamily::CI:
        return 0;
    case ModelFamily::CIX:
        return 1;
    case ModelFamily::CIF:
        return 2;
    case ModelFamily::CIFX:
        return 3;
    case ModelFamily::ABG:
        return 4;
    case ModelFamily::ABGX:
        return 5;
    case ModelFamily::FI:
        return 6;
    }
    return 7;
}

// Three parameter cells plus XPD for the multi-frequency layouts.
struct ParamCells
{
    std::string p1 = dash, p2 = dash, p3 = dash, xpd = dash;
};

ParamCells co_polarized_cells(const CoPolarizedModel &m)
{
    ParamCells c;
    if (const auto *ci = std::get_if<CiParams>(&m))
    {
        c.p1 = one_dp(ci->ple_n);
    }
    else if (const auto *cif = std::get_if<CifParams>(&m))
    {
        c.p1 = one_dp(cif->n);
        c.p2 = format_fixed(cif->b, 2);
        c.p3 = format_fixed(cif->f0_ghz, 0);
    }
    else if (const auto *abg = std::get_if<AbgParams>(&m))
    {
        c.p1 = one_dp(abg->alpha_dist);
        c.p2 = one_dp(abg->beta_db);
        c.p3 = one_dp(abg->gamma_freq);
    }
    return c;
}

ParamCells model_cells(const FittedModel &m)
{
    if (const auto *x = std::get_if<XpdExtension>(&m))
    {
        auto c = co_polarized_cells(x->base);
        c.xpd = one_dp(x->xpd_db);
        return c;
    }
    if (const auto *ci = std::get_if<CiParams>(&m))
        return co_polarized_cells(*ci);
    if (const auto *cif = std::get_if<CifParams>(&m))
        return co_polarized_cells(*cif);
    if (const auto *abg = std::get_if<AbgParams>(&m))
        return co_polarized_cells(*abg);
    return {};
}

std::string render_single_frequency(const FitReport &report)
{
    using Key = std::tuple<double, PolarizationClass, Environment, Layout>;
    std::map<Key, std::pair<const ReportEntry *, const ReportEntry *>> groups;
    for (const auto &e : report.entries)
    {
        if (e.is_multi_frequency() || e.frequencies_ghz.empty())
            continue;
        const auto fam = family_of(e.model);
        if (fam != ModelFamily::CI && fam != ModelFamily::FI)
            continue;
        auto &slot = groups[{e.frequencies_ghz.front(), e.scenario.polarization, e.scenario.environment,
                             e.scenario.layout}];
        auto &target = fam == ModelFamily::CI ? slot.first : slot.second;
        if (!target)
            target = &e;
    }

    std::vector<Row> rows;
    for (const auto &[key, pair] : groups)
    {
        const auto &[freq, pol, env, layout] = key;
        Row r{detail::shortest(freq) + " GHz", std::string(pol_label(pol)), std::string(to_string(env)),
              std::string(layout_label(layout))};
        const auto *ci = pair.first ? std::get_if<CiParams>(&pair.first->model) : nullptr;
        const auto *fi = pair.second ? std::get_if<FiParams>(&pair.second->model) : nullptr;
        r.push_back(ci ? one_dp(ci->ple_n) : dash);
        r.push_back(ci ? one_dp(ci->sigma_db) : dash);
        r.push_back(fi ? one_dp(fi->alpha_db) : dash);
        r.push_back(fi ? one_dp(fi->beta_slope) : dash);
        r.push_back(fi ? one_dp(fi->sigma_db) : dash);
        std::optional<double> ds;
        if (ci && fi && pair.first->sample_set == pair.second->sample_set)
            ds = delta_sigma(*pair.first, *pair.second);
        r.push_back(ds ? one_dp(*ds) : dash);
        rows.push_back(std::move(r));
    }
    return layout_table({"Freq.", "Pol.", "Env.", "L/O", "CI PLE", "CI sigma [dB]", "FI alpha [dB]", "FI beta",
                         "FI sigma [dB]", "delta sigma [dB]"},
                        rows);
}

std::string render_cross_polarized(const FitReport &report)
{
    using Key = std::tuple<double, PolarizationClass, Environment, Layout>;
    std::map<Key, const ReportEntry *> groups;
    for (const auto &e : report.entries)
    {
        if (e.is_multi_frequency() || e.frequencies_ghz.empty() || family_of(e.model) != ModelFamily::CIX)
            continue;
        groups.try_emplace({e.frequencies_ghz.front(), e.scenario.polarization, e.scenario.environment,
                            e.scenario.layout},
                           &e);
    }

    std::vector<Row> rows;
    for (const auto &[key, entry] : groups)
    {
        const auto &[freq, pol, env, layout] = key;
        const auto &x = std::get<XpdExtension>(entry->model);
        rows.push_back({detail::shortest(freq) + " GHz", std::string(pol_label(pol)), std::string(to_string(env)),
                        std::string(layout_label(layout)), model_cells(x).p1, one_dp(x.xpd_db), one_dp(x.sigma_db)});
    }
    return layout_table({"Freq.", "Pol.", "Env.", "L/O", "n(V-V)", "XPD [dB]", "sigma [dB]"}, rows);
}

std::vector<const ReportEntry *> multi_entries(const FitReport &report, bool combined)
{
    std::vector<const ReportEntry *> picked;
    for (const auto &e : report.entries)
    {
        if (!e.is_multi_frequency() || (e.scenario.polarization == PolarizationClass::Combined) != combined)
            continue;
        const auto fam = family_of(e.model);
        if (fam == ModelFamily::FI || (combined && is_xpd_family(fam)))
            continue;
        picked.push_back(&e);
    }
    return picked;
}

std::string render_multi_frequency(const FitReport &report)
{
    auto picked = multi_entries(report, false);
    std::stable_sort(picked.begin(), picked.end(), [](const ReportEntry *a, const ReportEntry *b) {
        return std::tuple(a->scenario.environment, a->scenario.layout, multi_family_rank(family_of(a->model))) <
               std::tuple(b->scenario.environment, b->scenario.layout, multi_family_rank(family_of(b->model)));
    });

    std::vector<Row> rows;
    for (const auto *e : picked)
    {
        const auto c = model_cells(e->model);
        rows.push_back({frequency_label(e->frequencies_ghz), std::string(to_string(e->scenario.environment)),
                        std::string(layout_label(e->scenario.layout)), std::string(to_string(family_of(e->model))),
                        std::string(pol_label(e->scenario.polarization)), c.p1, c.p2, c.p3, c.xpd,
                        one_dp(sigma_of(e->model))});
    }
    return layout_table({"Freqs [GHz]", "Env.", "L/O", "Model", "Pol.", "PLE/n/alpha", "b/beta", "f0 [GHz]/gamma",
                         "XPD [dB]", "sigma [dB]"},
                        rows);
}

std::string render_combined_multi(const FitReport &report)
{
    auto picked = multi_entries(report, true);
    std::stable_sort(picked.begin(), picked.end(), [](const ReportEntry *a, const ReportEntry *b) {
        return std::tuple(multi_family_rank(family_of(a->model)), a->scenario.environment, a->scenario.layout) <
               std::tuple(multi_family_rank(family_of(b->model)), b->scenario.environment, b->scenario.layout);
    });

    std::vector<Row> rows;
    for (const auto *e : picked)
    {
        const auto c = model_cells(e->model);
        rows.push_back({frequency_label(e->frequencies_ghz), std::string(to_string(family_of(e->model))),
                        std::string(to_string(e->scenario.environment)), std::string(layout_label(e->scenario.layout)),
                        c.p1, c.p2, c.p3, one_dp(sigma_of(e->model))});
    }
    return layout_table(
        {"Freqs [GHz]", "Model", "Env.", "L/O", "PLE/n/alpha", "b/beta", "f0 [GHz]/gamma", "sigma [dB]"}, rows);
}

} // namespace

std::string sample_set_id(const Dataset &data)
{
    Fnv1a h;
    h.add(static_cast<std::uint64_t>(data.size()));
    for (const auto &s : data.samples)
    {
        h.add(s.frequency.ghz());
        h.add(s.distance_m);
        h.add(s.path_loss_db);
        h.add(static_cast<std::uint64_t>(s.polarization) | static_cast<std::uint64_t>(s.environment) << 8 |
              static_cast<std::uint64_t>(s.layout) << 16);
    }
    char buf[17];
    auto [end, ec] = std::to_chars(buf, buf + 16, h.value(), 16);
    std::string hex(buf, end);
    return "fnv1a64:" + std::string(16 - hex.size(), '0') + hex;
}

ReportEntry make_entry(const ScenarioKey &scenario, const Dataset &training, FittedModel model)
{
    ReportEntry e{scenario, {}, std::move(model), sample_set_id(training), training.size()};
    for (const auto &f : distinct_frequencies(training))
        e.frequencies_ghz.push_back(f.ghz());
    return e;
}

double delta_sigma(const ReportEntry &ci, const ReportEntry &fi)
{
    if (family_of(ci.model) != ModelFamily::CI || family_of(fi.model) != ModelFamily::FI)
        throw DataError("mismatched-sample-sets", "delta_sigma needs one CI and one FI entry");
    if (ci.sample_set != fi.sample_set || ci.sample_count != fi.sample_count)
        throw DataError("mismatched-sample-sets", "delta_sigma: CI and FI were fitted on different sample sets");
    const double ds = sigma_of(ci.model) - sigma_of(fi.model);
    if (ds < -0.05)
        throw NumericalError("internal-consistency",
                             "delta_sigma: FI sigma exceeds CI sigma by " + format_fixed(-ds, 3) +
                                 " dB on identical data");
    return ds;
}

std::optional<double> paired_delta_sigma(const FitReport &report, const ReportEntry &fi)
{
    if (family_of(fi.model) != ModelFamily::FI)
        return std::nullopt;
    for (const auto &e : report.entries)
        if (family_of(e.model) == ModelFamily::CI && e.sample_set == fi.sample_set &&
            e.sample_count == fi.sample_count && e.scenario == fi.scenario)
            return delta_sigma(e, fi);
    return std::nullopt;
}

std::string_view to_string(TableStyle style) noexcept
{
    switch (style)
    {
    case TableStyle::single_frequency:
        return "single-frequency CI/FI";
    case TableStyle::cross_polarized:
        return "single-frequency CIX";
    case TableStyle::multi_frequency:
        return "multi-frequency";
    case TableStyle::combined_multi:
        return "combined-polarization multi-frequency";
    }
    return "?";
}

std::string render_table(const FitReport &report, TableStyle style)
{
    switch (style)
    {
    case TableStyle::single_frequency:
        return render_single_frequency(report);
    case TableStyle::cross_polarized:
        return render_cross_polarized(report);
    case TableStyle::multi_frequency:
        return render_multi_frequency(report);
    case TableStyle::combined_multi:
        return render_combined_multi(report);
    }
    return {};
}

std::string format_fixed(double value, int decimals)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    if (decimals < 0)
        decimals = 0;

    char buf[1200];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, std::abs(value), std::chars_format::fixed);
    std::string text(buf, end);
    const auto dot = text.find('.');
    std::string digits = dot == std::string::npos ? text : text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t int_len = dot == std::string::npos ? text.size() : dot;
    const std::size_t keep = int_len + static_cast<std::size_t>(decimals);

    if (digits.size() > keep)
    {
        const bool round_up = digits[keep] >= '5';
        digits.resize(keep);
        if (round_up)
        {
            std::size_t i = digits.size();
            while (i > 0 && digits[i - 1] == '9')
                digits[--i] = '0';
            if (i == 0)
                digits.insert(digits.begin(), '1');
            else
                ++digits[i - 1];
        }
    }
    else
    {
        digits.append(keep - digits.size(), '0');
    }

    const std::size_t new_int_len = digits.size() - static_cast<std::size_t>(decimals);
    std::string out = digits.substr(0, new_int_len);
    if (decimals > 0)
        out += '.' + digits.substr(new_int_len);
    const bool is_zero = out.find_first_not_of("0.") == std::string::npos;
    return (value < 0 && !is_zero) ? "-" + out : out;
}

} // namespace mmwpl
