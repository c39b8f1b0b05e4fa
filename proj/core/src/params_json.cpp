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

#include "mmwpl/params_json.hpp"

#include "mmwpl/errors.hpp"

#include <json.hpp>

namespace mmwpl
{

namespace
{

using json = nlohmann::ordered_json;

json co_polarized_json(const CoPolarizedModel &m);

json model_json(const FittedModel &m)
{
    json j;
    j["model"] = std::string(to_string(family_of(m)));
    if (const auto *ci = std::get_if<CiParams>(&m))
    {
        j["n"] = ci->ple_n;
        j["sigma_db"] = ci->sigma_db;
        j["d0_m"] = ci->d0_m;
    }
    else if (const auto *fi = std::get_if<FiParams>(&m))
    {
        j["alpha_db"] = fi->alpha_db;
        j["beta"] = fi->beta_slope;
        j["sigma_db"] = fi->sigma_db;
    }
    else if (const auto *abg = std::get_if<AbgParams>(&m))
    {
        j["alpha"] = abg->alpha_dist;
        j["beta_db"] = abg->beta_db;
        j["gamma"] = abg->gamma_freq;
        j["sigma_db"] = abg->sigma_db;
        j["d0_m"] = abg->d0_m;
    }
    else if (const auto *cif = std::get_if<CifParams>(&m))
    {
        j["n"] = cif->n;
        j["b"] = cif->b;
        j["f0_ghz"] = cif->f0_ghz;
        j["sigma_db"] = cif->sigma_db;
        j["d0_m"] = cif->d0_m;
    }
    else if (const auto *x = std::get_if<XpdExtension>(&m))
    {
        j["base"] = co_polarized_json(x->base);
        j["xpd_db"] = x->xpd_db;
        j["sigma_db"] = x->sigma_db;
    }
    return j;
}

json co_polarized_json(const CoPolarizedModel &m)
{
    return model_json(widen(m));
}

[[noreturn]] void malformed(const std::string &what)
{
    throw DataError("malformed-params", "params JSON: " + what);
}

double number(const json &j, const char *key)
{
    const auto it = j.find(key);
    if (it == j.end() || !it->is_number())
        malformed(std::string("missing numeric field '") + key + "'");
    return it->get<double>();
}

double reference_distance(const json &j)
{
    const auto it = j.find("d0_m");
    if (it == j.end())
        return reference_distance_m;
    if (!it->is_number() || it->get<double>() != reference_distance_m)
        malformed("d0_m must be 1");
    return reference_distance_m;
}

FittedModel parse_model(const json &j);

CoPolarizedModel parse_co_polarized(const json &j)
{
    const auto m = parse_model(j);
    if (const auto *ci = std::get_if<CiParams>(&m))
        return *ci;
    if (const auto *abg = std::get_if<AbgParams>(&m))
        return *abg;
    if (const auto *cif = std::get_if<CifParams>(&m))
        return *cif;
    malformed("XPD base must be CI, ABG or CIF");
}

FittedModel parse_model(const json &j)
{
    if (!j.is_object() || !j.contains("model") || !j["model"].is_string())
        malformed("model object lacks a 'model' name");
    const auto family = parse_model_family(j["model"].get<std::string>());
    if (!family)
        malformed("unknown model '" + j["model"].get<std::string>() + "'");

    switch (*family)
    {
    case ModelFamily::CI:
        return CiParams{number(j, "n"), number(j, "sigma_db"), reference_distance(j)};
    case ModelFamily::FI:
        return FiParams{number(j, "alpha_db"), number(j, "beta"), number(j, "sigma_db")};
    case ModelFamily::ABG:
        return AbgParams{number(j, "alpha"), number(j, "beta_db"), number(j, "gamma"), number(j, "sigma_db"),
                         reference_distance(j)};
    case ModelFamily::CIF:
        return CifParams{number(j, "n"), number(j, "b"), number(j, "f0_ghz"), number(j, "sigma_db"),
                         reference_distance(j)};
    case ModelFamily::CIX:
    case ModelFamily::ABGX:
    case ModelFamily::CIFX: {
        if (!j.contains("base"))
            malformed("XPD model lacks 'base'");
        XpdExtension x{parse_co_polarized(j["base"]), number(j, "xpd_db"), number(j, "sigma_db")};
        if (family_of(FittedModel(x)) != *family)
            malformed("XPD model name does not match its base");
        return x;
    }
    }
    malformed("unreachable model family");
}

ScenarioKey parse_scenario(const json &j)
{
    if (!j.is_object())
        malformed("scenario must be an object");
    auto text = [&](const char *key) {
        if (!j.contains(key) || !j[key].is_string())
            malformed(std::string("scenario lacks '") + key + "'");
        return j[key].get<std::string>();
    };
    const auto env = parse_environment(text("environment"));
    const auto layout = parse_layout(text("layout"));
    const auto pol = parse_polarization_class(text("polarization"));
    if (!env || !layout || !pol)
        malformed("unknown scenario token");
    return {*env, *layout, *pol};
}

} // namespace

std::string write_params_json(const FitReport &report)
{
    json doc;
    doc["schema_version"] = params_schema_version;
    doc["provenance"] = report.provenance;
    doc["entries"] = json::array();
    for (const auto &e : report.entries)
    {
        json entry;
        entry["scenario"] = {{"environment", std::string(to_string(e.scenario.environment))},
                             {"layout", std::string(to_string(e.scenario.layout))},
                             {"polarization", std::string(to_string(e.scenario.polarization))}};
        entry["frequencies_ghz"] = e.frequencies_ghz;
        entry["sample_count"] = e.sample_count;
        entry["sample_set"] = e.sample_set;
        entry["params"] = model_json(e.model);
        if (auto ds = paired_delta_sigma(report, e))
            entry["delta_sigma_db"] = *ds;
        doc["entries"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

FitReport read_params_json(std::string_view text)
{
    json doc;
    try
    {
        doc = json::parse(text.begin(), text.end());
    }
    catch (const json::exception &ex)
    {
        malformed(ex.what());
    }
    if (!doc.is_object())
        malformed("top level must be an object");
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
        malformed("missing schema_version");
    if (doc["schema_version"].get<int>() != params_schema_version)
        throw DataError("unsupported-schema",
                        "params JSON schema_version " + doc["schema_version"].dump() + " is not supported");

    FitReport report;
    if (doc.contains("provenance") && doc["provenance"].is_string())
        report.provenance = doc["provenance"].get<std::string>();
    if (!doc.contains("entries") || !doc["entries"].is_array())
        malformed("missing entries array");

    for (const auto &j : doc["entries"])
    {
        if (!j.is_object() || !j.contains("scenario") || !j.contains("params"))
            malformed("entry lacks scenario or params");
        ReportEntry e{parse_scenario(j["scenario"]), {}, parse_model(j["params"]), {}, 0};
        if (j.contains("frequencies_ghz"))
        {
            if (!j["frequencies_ghz"].is_array())
                malformed("frequencies_ghz must be an array");
            for (const auto &f : j["frequencies_ghz"])
            {
                if (!f.is_number())
                    malformed("frequencies_ghz must hold numbers");
                e.frequencies_ghz.push_back(f.get<double>());
            }
        }
        if (j.contains("sample_set") && j["sample_set"].is_string())
            e.sample_set = j["sample_set"].get<std::string>();
        if (j.contains("sample_count") && j["sample_count"].is_number_unsigned())
            e.sample_count = j["sample_count"].get<std::size_t>();
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace mmwpl
