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

#include "cli.hpp"

#include "pipeline.hpp"

#include <mmwpl/csv.hpp>
#include <mmwpl/errors.hpp>
#include <mmwpl/estimators.hpp>
#include <mmwpl/params_json.hpp>
#include <mmwpl/presets.hpp>
#include <mmwpl/report.hpp>
#include <mmwpl/synthesis.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mmwpl::cli
{

namespace
{

class UsageError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

struct Options
{
    // shared
    std::string input;
    std::string output;
    std::string table_output;
    std::string params;
    std::string preset;
    std::vector<std::string> envs;
    std::vector<std::string> layouts;
    std::string pol;
    std::vector<std::string> models;
    std::optional<double> f0;
    bool lax = false;
    bool campaign_only = false;
    std::string style;

    // predict
    std::vector<double> freqs;
    std::vector<double> distances;

    // synth
    std::vector<std::string> synth_freqs;
    std::size_t count = 50;
    double dmin = DistanceRange{}.min_m;
    double dmax = DistanceRange{}.max_m;
    std::uint64_t seed = default_synthesis_seed;
    std::optional<double> n, b, alpha, beta, gamma, xpd, sigma;
};

Dataset load_csv(const Options &o, std::ostream &err)
{
    std::ifstream in(o.input, std::ios::binary);
    if (!in)
        throw DataError("io", "cannot open input file '" + o.input + "'");
    auto result =
        read_csv(in, o.lax ? CsvMode::lax : CsvMode::strict, std::filesystem::path(o.input).filename().string());
    for (const auto &skip : result.skipped)
        err << "warning: skipped line " << skip.line << ": " << skip.reason << '\n';
    return std::move(result.dataset);
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw DataError("io", "cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string &path, const std::string &text, std::ostream &out)
{
    if (path.empty() || path == "-")
    {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw DataError("io", "cannot write output file '" + path + "'");
    f << text;
}

template <class T>
std::vector<T> parse_all(const std::vector<std::string> &tokens, std::optional<T> (*parser)(std::string_view),
                         const char *what)
{
    std::vector<T> out;
    for (const auto &t : tokens)
    {
        auto v = parser(t);
        if (!v)
            throw UsageError(std::string("unknown ") + what + " '" + t + "'");
        out.push_back(*v);
    }
    return out;
}

FitReport load_params(const Options &o)
{
    if (!o.params.empty() && !o.preset.empty())
        throw UsageError("--params and --preset are mutually exclusive");
    if (!o.preset.empty())
        return select_presets(o.preset);
    if (!o.params.empty())
        return read_params_json(read_file(o.params));
    throw UsageError("a parameter source is required: --params FILE or --preset SELECTOR");
}

FitReport filter_models(FitReport report, const Options &o)
{
    if (o.models.empty())
        return report;
    const auto families = parse_all<ModelFamily>(o.models, parse_model_family, "model family");
    std::erase_if(report.entries, [&](const ReportEntry &e) {
        return std::find(families.begin(), families.end(), family_of(e.model)) == families.end();
    });
    if (report.entries.empty())
        throw UsageError("no parameter entries match the requested model families");
    return report;
}

std::string format_path_loss(double v)
{
    return format_fixed(v, 3);
}

int cmd_fit(const Options &o, std::ostream &out, std::ostream &err)
{
    const auto data = load_csv(o, err);
    FitOptions fo;
    fo.environments = parse_all<Environment>(o.envs, parse_environment, "environment");
    fo.layouts = parse_all<Layout>(o.layouts, parse_layout, "layout");
    for (auto f : parse_all<ModelFamily>(o.models, parse_model_family, "model family"))
        fo.families.insert(f);
    fo.f0_ghz = o.f0;
    fo.campaign_only = o.campaign_only;

    const auto report = fit_dataset(data, fo, "fit:" + data.provenance);
    emit(o.output, write_params_json(report), out);
    emit(o.table_output, render_all_tables(report), out);
    return exit_ok;
}

int cmd_predict(const Options &o, std::ostream &out)
{
    const auto report = filter_models(load_params(o), o);
    if (o.distances.empty())
        throw UsageError("predict needs at least one --d distance");
    if (o.freqs.empty())
        throw UsageError("predict needs at least one --f frequency");

    std::string text = "model,scenario,freq_ghz,distance_m,path_loss_db\n";
    for (const auto &e : report.entries)
        for (double f : o.freqs)
            for (double d : o.distances)
            {
                const double pl = predict(e.model, Frequency(f), d);
                text += std::string(to_string(family_of(e.model))) + ',' + to_string(e.scenario) + ',' +
                        format_fixed(f, 3) + ',' + format_fixed(d, 3) + ',' + format_path_loss(pl) + '\n';
            }
    emit(o.output, text, out);
    return exit_ok;
}

double required(const std::optional<double> &v, const char *flag, ModelFamily family)
{
    if (!v)
        throw UsageError(std::string(to_string(family)) + " synthesis needs --" + flag);
    return *v;
}

FittedModel model_from_flags(const Options &o)
{
    if (o.models.size() != 1)
        throw UsageError("synth needs exactly one --model family");
    const auto family = parse_model_family(o.models.front());
    if (!family)
        throw UsageError("unknown model family '" + o.models.front() + "'");
    const double sigma = required(o.sigma, "sigma", *family);

    auto co_polarized = [&](ModelFamily base) -> CoPolarizedModel {
        switch (base)
        {
        case ModelFamily::ABG:
            return AbgParams{required(o.alpha, "alpha", *family), required(o.beta, "beta", *family),
                             required(o.gamma, "gamma", *family), sigma};
        case ModelFamily::CIF:
            return CifParams{required(o.n, "n", *family), required(o.b, "b", *family), required(o.f0, "f0", *family),
                             sigma};
        default:
            return CiParams{required(o.n, "n", *family), sigma};
        }
    };

    switch (*family)
    {
    case ModelFamily::FI:
        return FiParams{required(o.alpha, "alpha", *family), required(o.beta, "beta", *family), sigma};
    case ModelFamily::CI:
    case ModelFamily::ABG:
    case ModelFamily::CIF:
        return widen(co_polarized(*family));
    case ModelFamily::CIX:
        return XpdExtension{co_polarized(ModelFamily::CI), required(o.xpd, "xpd", *family), sigma};
    case ModelFamily::ABGX:
        return XpdExtension{co_polarized(ModelFamily::ABG), required(o.xpd, "xpd", *family), sigma};
    case ModelFamily::CIFX:
        return XpdExtension{co_polarized(ModelFamily::CIF), required(o.xpd, "xpd", *family), sigma};
    }
    throw UsageError("unsupported model family");
}

int cmd_synth(const Options &o, std::ostream &out)
{
    SynthesisSpec spec{CiParams{}, {Environment::LOS, Layout::Corridor, PolarizationClass::VV}, {}, {o.dmin, o.dmax},
                       o.seed};

    if (!o.params.empty() || !o.preset.empty())
    {
        const auto report = filter_models(load_params(o), o);
        if (report.entries.size() != 1)
            throw UsageError("parameter source holds " + std::to_string(report.entries.size()) +
                             " models; narrow it with --model or a more specific selector");
        spec.model = report.entries.front().model;
        spec.scenario = report.entries.front().scenario;
    }
    else
    {
        spec.model = model_from_flags(o);
    }

    if (o.envs.size() > 1 || o.layouts.size() > 1)
        throw UsageError("synth takes a single --env and --layout");
    if (!o.envs.empty())
        spec.scenario.environment = parse_all<Environment>(o.envs, parse_environment, "environment").front();
    if (!o.layouts.empty())
        spec.scenario.layout = parse_all<Layout>(o.layouts, parse_layout, "layout").front();
    if (!o.pol.empty())
    {
        const auto pol = parse_polarization(o.pol);
        if (!pol)
            throw UsageError("synth --pol must be VV or VH");
        spec.scenario.polarization = *pol == Polarization::VV ? PolarizationClass::VV : PolarizationClass::VH;
    }

    if (o.synth_freqs.empty())
        throw UsageError("synth needs at least one --freq GHZ[:COUNT]");
    for (const auto &token : o.synth_freqs)
    {
        const auto colon = token.find(':');
        double ghz = 0.0;
        std::size_t count = o.count;
        try
        {
            std::size_t used = 0;
            ghz = std::stod(token.substr(0, colon), &used);
            if (used != token.substr(0, colon).size())
                throw std::invalid_argument(token);
            if (colon != std::string::npos)
            {
                const auto c = token.substr(colon + 1);
                const long long parsed = std::stoll(c, &used);
                if (used != c.size() || parsed <= 0)
                    throw std::invalid_argument(token);
                count = static_cast<std::size_t>(parsed);
            }
        }
        catch (const std::logic_error &)
        {
            throw UsageError("bad --freq value '" + token + "', expected GHZ or GHZ:COUNT");
        }
        spec.frequencies.push_back({Frequency(ghz), count});
    }

    std::ostringstream csv;
    write_csv(csv, synthesize(spec));
    emit(o.output, csv.str(), out);
    return exit_ok;
}

std::optional<TableStyle> parse_style(const std::string &s)
{
    if (s == "table3")
        return TableStyle::single_frequency;
    if (s == "table4")
        return TableStyle::cross_polarized;
    if (s == "table5")
        return TableStyle::multi_frequency;
    if (s == "table6")
        return TableStyle::combined_multi;
    return std::nullopt;
}

int cmd_report(const Options &o, std::ostream &out)
{
    const auto report = filter_models(load_params(o), o);
    std::string style = o.style;
    if (style.empty())
        style = o.preset.empty() ? "all" : "table" + std::to_string(parse_preset_selector(o.preset).table);

    std::string text;
    if (style == "all")
    {
        text = render_all_tables(report);
    }
    else if (auto s = parse_style(style))
    {
        text = "== " + std::string(to_string(*s)) + " ==\n" + render_table(report, *s);
    }
    else
    {
        throw UsageError("unknown --style '" + style + "' (table3, table4, table5, table6, all)");
    }
    emit(o.output, text, out);
    return exit_ok;
}

int cmd_compare(const Options &o, std::ostream &out, std::ostream &err)
{
    auto data = load_csv(o, err);
    const auto envs = parse_all<Environment>(o.envs, parse_environment, "environment");
    const auto layouts = parse_all<Layout>(o.layouts, parse_layout, "layout");
    std::optional<PolarizationClass> pol;
    if (!o.pol.empty() && !(pol = parse_polarization_class(o.pol)))
        throw UsageError("unknown polarization class '" + o.pol + "'");
    std::erase_if(data.samples, [&](const PathLossSample &s) {
        return (!envs.empty() && std::find(envs.begin(), envs.end(), s.environment) == envs.end()) ||
               (!layouts.empty() && std::find(layouts.begin(), layouts.end(), s.layout) == layouts.end()) ||
               (pol && !matches(*pol, s.polarization));
    });

    const auto report = compare_dataset(data, o.f0, "compare:" + data.provenance);
    const auto &ci = report.entries.front();
    std::string text = "samples: " + std::to_string(data.size()) + "\n";
    text += "model | sigma [dB] | sigma_CI - sigma [dB]\n";
    for (const auto &e : report.entries)
    {
        text += std::string(to_string(family_of(e.model))) + " | " + format_fixed(sigma_of(e.model), 2) + " | " +
                (&e == &ci ? std::string("-") : format_fixed(sigma_of(ci.model) - sigma_of(e.model), 2)) + "\n";
    }
    if (report.entries.size() == 2)
        text += "delta sigma (CI - FI): " + format_fixed(delta_sigma(report.entries[0], report.entries[1]), 2) +
                " dB\n";
    text += '\n' + render_all_tables(report);
    emit(o.output, text, out);
    return exit_ok;
}

void add_scenario_filters(CLI::App *cmd, Options &o)
{
    cmd->add_option("--env", o.envs, "Environment filter: LOS, NLOS")->delimiter(',');
    cmd->add_option("--layout", o.layouts, "Layout filter: CO, OP, CP")->delimiter(',');
}

void add_param_source(CLI::App *cmd, Options &o)
{
    cmd->add_option("--params", o.params, "Parameter JSON written by `fit`");
    cmd->add_option("--preset", o.preset, "Published preset, tableN[:freq|multi][:pol][:env][:layout]");
    cmd->add_option("--model", o.models, "Model family filter (CI, CIX, FI, ABG, ABGX, CIF, CIFX)")->delimiter(',');
}

int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Indoor mmWave path loss model fitting (CI, CIX, FI, ABG, ABGX, CIF, CIFX)", "mmwpl"};
    app.require_subcommand(1);
    Options o;

    auto *fit = app.add_subcommand("fit", "Fit path loss models to a CSV dataset");
    fit->add_option("--input,-i", o.input, "Input CSV")->required();
    fit->add_option("--output,-o", o.output, "Parameter JSON output (default stdout)");
    fit->add_option("--table", o.table_output, "Rendered tables output (default stdout)");
    add_scenario_filters(fit, o);
    fit->add_option("--models", o.models, "Families to fit (default: all the data supports)")->delimiter(',');
    fit->add_option("--f0", o.f0, "CIF reference frequency override in GHz");
    fit->add_flag("--lax", o.lax, "Skip invalid rows instead of failing");
    fit->add_flag("--campaign-only", o.campaign_only, "Drop LOS closed-plan samples");

    auto *pred = app.add_subcommand("predict", "Evaluate mean path loss of fitted or preset models");
    add_param_source(pred, o);
    pred->add_option("--f", o.freqs, "Frequencies in GHz")->delimiter(',');
    pred->add_option("--d", o.distances, "Distances in meters")->delimiter(',');
    pred->add_option("--output,-o", o.output, "CSV output (default stdout)");

    auto *synth = app.add_subcommand("synth", "Synthesize a shadow-faded dataset");
    add_param_source(synth, o);
    add_scenario_filters(synth, o);
    synth->add_option("--pol", o.pol, "Polarization of generated samples: VV or VH");
    synth->add_option("--freq", o.synth_freqs, "Frequency GHZ[:COUNT], repeatable")->delimiter(',');
    synth->add_option("--count", o.count, "Samples per frequency when COUNT is omitted");
    synth->add_option("--dmin", o.dmin, "Minimum distance, m");
    synth->add_option("--dmax", o.dmax, "Maximum distance, m");
    synth->add_option("--seed", o.seed, "Random seed");
    synth->add_option("--n", o.n, "PLE n (CI, CIF)");
    synth->add_option("--b", o.b, "CIF frequency weighting b");
    synth->add_option("--f0", o.f0, "CIF reference frequency, GHz");
    synth->add_option("--alpha", o.alpha, "FI intercept (dB) or ABG distance coefficient");
    synth->add_option("--beta", o.beta, "FI slope or ABG offset (dB)");
    synth->add_option("--gamma", o.gamma, "ABG frequency coefficient");
    synth->add_option("--xpd", o.xpd, "XPD offset, dB (CIX, ABGX, CIFX)");
    synth->add_option("--sigma", o.sigma, "Shadow fading standard deviation, dB");
    synth->add_option("--output,-o", o.output, "CSV output (default stdout)");

    auto *rep = app.add_subcommand("report", "Render parameter tables");
    add_param_source(rep, o);
    rep->add_option("--style", o.style, "table3, table4, table5, table6 or all");
    rep->add_option("--output,-o", o.output, "Text output (default stdout)");

    auto *cmp = app.add_subcommand("compare", "Compare shadow fading of CI against FI or CIF/ABG");
    cmp->add_option("--input,-i", o.input, "Input CSV")->required();
    add_scenario_filters(cmp, o);
    cmp->add_option("--pol", o.pol, "Polarization class: VV, VH or Comb");
    cmp->add_option("--f0", o.f0, "CIF reference frequency override in GHz");
    cmp->add_flag("--lax", o.lax, "Skip invalid rows instead of failing");
    cmp->add_option("--output,-o", o.output, "Text output (default stdout)");

    try
    {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    if (fit->parsed())
        return cmd_fit(o, out, err);
    if (pred->parsed())
        return cmd_predict(o, out);
    if (synth->parsed())
        return cmd_synth(o, out);
    if (rep->parsed())
        return cmd_report(o, out);
    return cmd_compare(o, out, err);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    try
    {
        return dispatch(args, out, err);
    }
    catch (const UsageError &e)
    {
        err << "error[usage/bad-argument]: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const Error &e)
    {
        err << "error[" << to_string(e.error_class()) << '/' << e.code() << "]: " << e.what() << '\n';
        return e.error_class() == ErrorClass::numerical ? exit_numerical : exit_data;
    }
}

} // namespace mmwpl::cli
