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

#include "pipeline.hpp"

#include <mmwpl/errors.hpp>
#include <mmwpl/estimators.hpp>

#include <algorithm>
#include <map>

namespace mmwpl::cli
{

namespace
{

Dataset at_frequency(const Dataset &data, Frequency f)
{
    Dataset out;
    out.provenance = data.provenance;
    std::copy_if(data.samples.begin(), data.samples.end(), std::back_inserter(out.samples),
                 [&](const PathLossSample &s) { return s.frequency == f; });
    return out;
}

class Fitter
{
  public:
    Fitter(const FitOptions &options, FitReport &report) : options_(options), report_(report) {}

    bool wants(ModelFamily f) const { return options_.families.empty() || options_.families.contains(f); }
    bool explicitly(ModelFamily f) const { return options_.families.contains(f); }

    void add(const ScenarioKey &key, const Dataset &data, FittedModel model)
    {
        report_.entries.push_back(make_entry(key, data, std::move(model)));
    }

    void single_frequency(Environment env, Layout layout, const Dataset &scenario, Frequency f)
    {
        const auto vv = at_frequency(partition_by_scenario(scenario, {env, layout, PolarizationClass::VV}), f);
        const auto vh = at_frequency(partition_by_scenario(scenario, {env, layout, PolarizationClass::VH}), f);
        const auto comb = at_frequency(scenario, f);

        const std::pair<PolarizationClass, const Dataset *> subsets[] = {
            {PolarizationClass::VV, &vv}, {PolarizationClass::VH, &vh}, {PolarizationClass::Combined, &comb}};
        for (const auto &[cls, data] : subsets)
        {
            if (data->empty() || (cls == PolarizationClass::Combined && (vv.empty() || vh.empty())))
                continue;
            const ScenarioKey key{env, layout, cls};
            if (wants(ModelFamily::CI))
                add(key, *data, fit_ci(*data));
            if (wants(ModelFamily::FI))
                add(key, *data, fit_fi(*data));
        }
        if (wants(ModelFamily::CIX) && !vv.empty() && !vh.empty())
            add({env, layout, PolarizationClass::VH}, vh, fit_xpd(fit_ci(vv), vh));
    }

    void multi_frequency(Environment env, Layout layout, const Dataset &scenario)
    {
        const ScenarioKey co{env, layout, PolarizationClass::VV};
        const ScenarioKey cross{env, layout, PolarizationClass::VH};
        const ScenarioKey comb{env, layout, PolarizationClass::Combined};
        const auto vv = partition_by_scenario(scenario, co);
        const auto vh = partition_by_scenario(scenario, cross);

        auto f0 = [&](const Dataset &d) { return options_.f0_ghz.value_or(compute_f0(d)); };

        if (!vv.empty())
        {
            const auto ci = fit_ci(vv);
            if (wants(ModelFamily::CI))
                add(co, vv, ci);
            if (wants(ModelFamily::CIX) && !vh.empty())
                add(cross, vh, fit_xpd(ci, vh));

            if (wants(ModelFamily::CIF) || (wants(ModelFamily::CIFX) && !vh.empty()))
            {
                const auto cif = fit_cif(vv, f0(vv));
                if (wants(ModelFamily::CIF))
                    add(co, vv, cif);
                if (wants(ModelFamily::CIFX) && !vh.empty())
                    add(cross, vh, fit_xpd(cif, vh));
            }
            if (wants(ModelFamily::ABG) || (wants(ModelFamily::ABGX) && !vh.empty()))
            {
                const auto abg = fit_abg(vv);
                if (wants(ModelFamily::ABG))
                    add(co, vv, abg);
                if (wants(ModelFamily::ABGX) && !vh.empty())
                    add(cross, vh, fit_xpd(abg, vh));
            }
        }

        if (!vv.empty() && !vh.empty())
        {
            if (wants(ModelFamily::CI))
                add(comb, scenario, fit_ci(scenario));
            if (wants(ModelFamily::CIF))
                add(comb, scenario, fit_cif(scenario, f0(scenario)));
            if (wants(ModelFamily::ABG))
                add(comb, scenario, fit_abg(scenario));
        }
    }

  private:
    const FitOptions &options_;
    FitReport &report_;
};

} // namespace

FitReport fit_dataset(const Dataset &data, const FitOptions &options, std::string provenance)
{
    if (data.empty())
        throw DataError("empty-dataset", "fit: input dataset is empty");

    FitReport report;
    report.provenance = std::move(provenance);
    Fitter fitter(options, report);

    std::map<std::pair<Environment, Layout>, Dataset> scenarios;
    for (const auto &s : data.samples)
    {
        if (!options.environments.empty() &&
            std::find(options.environments.begin(), options.environments.end(), s.environment) ==
                options.environments.end())
            continue;
        if (!options.layouts.empty() &&
            std::find(options.layouts.begin(), options.layouts.end(), s.layout) == options.layouts.end())
            continue;
        if (options.campaign_only && !is_campaign_measured(s.environment, s.layout))
            continue;
        auto &bucket = scenarios[{s.environment, s.layout}];
        bucket.provenance = data.provenance;
        bucket.samples.push_back(s);
    }
    if (scenarios.empty())
        throw DataError("empty-dataset", "fit: no samples match the scenario filters");

    for (const auto &[pair, scenario] : scenarios)
    {
        const auto [env, layout] = pair;
        const auto freqs = distinct_frequencies(scenario);
        for (const auto f : freqs)
            fitter.single_frequency(env, layout, scenario, f);

        if (freqs.size() >= 2)
        {
            fitter.multi_frequency(env, layout, scenario);
        }
        else
        {
            for (auto fam : {ModelFamily::ABG, ModelFamily::ABGX, ModelFamily::CIF, ModelFamily::CIFX})
                if (fitter.explicitly(fam))
                    throw NumericalError("frequency-column-degenerate",
                                         "fit: " + std::string(to_string(fam)) +
                                             " needs at least two frequencies; scenario " +
                                             std::string(to_string(env)) + ":" + std::string(to_string(layout)) +
                                             " has one");
        }
    }
    return report;
}

FitReport compare_dataset(const Dataset &data, std::optional<double> f0_ghz, std::string provenance)
{
    if (data.empty())
        throw DataError("empty-dataset", "compare: dataset is empty");

    // Scenario label of the compared set: the common key when uniform.
    const auto &first = data.samples.front();
    ScenarioKey key{first.environment, first.layout,
                    first.polarization == Polarization::VV ? PolarizationClass::VV : PolarizationClass::VH};
    for (const auto &s : data.samples)
        if (s.polarization != first.polarization)
            key.polarization = PolarizationClass::Combined;

    FitReport report;
    report.provenance = std::move(provenance);
    report.entries.push_back(make_entry(key, data, fit_ci(data)));
    if (distinct_frequencies(data).size() < 2)
    {
        report.entries.push_back(make_entry(key, data, fit_fi(data)));
    }
    else
    {
        report.entries.push_back(make_entry(key, data, fit_cif(data, f0_ghz.value_or(compute_f0(data)))));
        report.entries.push_back(make_entry(key, data, fit_abg(data)));
    }
    return report;
}

std::string render_all_tables(const FitReport &report)
{
    std::string out;
    for (auto style : {TableStyle::single_frequency, TableStyle::cross_polarized, TableStyle::multi_frequency,
                       TableStyle::combined_multi})
    {
        const auto table = render_table(report, style);
        // Header plus rule only: nothing to show.
        if (std::count(table.begin(), table.end(), '\n') <= 2)
            continue;
        if (!out.empty())
            out += '\n';
        out += "== " + std::string(to_string(style)) + " ==\n" + table;
    }
    return out;
}

} // namespace mmwpl::cli
