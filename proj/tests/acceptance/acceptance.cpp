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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion also enforces its runtime budget.

#include "cli.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "published_tables.hpp"

#include <mmwpl/estimators.hpp>
#include <mmwpl/freespace.hpp>
#include <mmwpl/presets.hpp>
#include <mmwpl/report.hpp>
#include <mmwpl/synthesis.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace mmwpl;
using namespace fixtures;
namespace fs = std::filesystem;

namespace
{

struct Verdict
{
    bool ok = true;
    std::string detail;

    void require(bool condition, const std::string &what)
    {
        if (!condition && ok)
        {
            ok = false;
            detail = what;
        }
    }
};

struct Criterion
{
    int id;
    std::string title;
    double budget_s;
    std::function<Verdict()> check;
};

std::string num(double v)
{
    std::ostringstream s;
    s.precision(17);
    s << v;
    return s.str();
}

bool close(double a, double b, double tol)
{
    return std::abs(a - b) <= tol;
}

// The five measured (environment, layout) pairs.
std::vector<std::pair<Environment, Layout>> measured_pairs()
{
    std::vector<std::pair<Environment, Layout>> out;
    for (const auto &key : paper_scenario_set())
        if (key.polarization == PolarizationClass::VV)
            out.emplace_back(key.environment, key.layout);
    return out;
}

Verdict fspl_anchors()
{
    Verdict v;
    const double f28 = fspl_1m_db(Frequency(28));
    const double f73 = fspl_1m_db(Frequency(73));
    v.require(close(f28, 61.39, 0.01), "FSPL(28 GHz, 1 m) = " + num(f28));
    v.require(close(f73, 69.71, 0.01), "FSPL(73 GHz, 1 m) = " + num(f73));
    v.require(close(f28, oracle::friis_db(28, 1), 1e-9), "28 GHz disagrees with the Friis oracle");
    v.require(close(f73, oracle::friis_db(73, 1), 1e-9), "73 GHz disagrees with the Friis oracle");
    return v;
}

Verdict exact_recovery()
{
    Verdict v;
    const auto distances = log_spaced(3.9, 45.9, 24);
    const double tol = 1e-9;
    // Generating parameters per measured pair, taken from the multi-frequency
    // and 28 GHz V-V published rows.
    struct Truth
    {
        double ci_n, fi_alpha, fi_beta, abg_a, abg_b, abg_g, cif_n, cif_b, cif_f0;
    };
    const Truth truths[] = {
        {1.1, 63.6, 0.9, 0.5, 32.2, 2.4, 1.1, 0.13, 51}, {1.4, 52.3, 2.3, 1.7, 17.8, 2.7, 1.4, 0.24, 51},
        {2.8, 40.7, 4.0, 4.2, -17.2, 3.8, 2.8, 0.22, 51}, {2.8, 38.5, 4.6, 4.1, -12.2, 3.8, 2.8, 0.21, 49},
        {3.0, 55.0, 3.3, 2.8, 6.2, 3.8, 3.0, 0.20, 50},
    };
    const auto pairs = measured_pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i)
    {
        const auto [env, layout] = pairs[i];
        const auto &t = truths[i];
        const std::string where = " in " + std::string(to_string(env)) + ":" + std::string(to_string(layout));
        auto gen = [&](std::vector<double> freqs, std::function<double(double, double)> truth) {
            return make_dataset(freqs, distances, truth, Polarization::VV, env, layout);
        };

        const auto ci = fit_ci(gen({28, 73}, [&](double f, double d) { return ci_truth(f, d, t.ci_n); }));
        v.require(close(ci.ple_n, t.ci_n, tol) && ci.sigma_db <= tol, "CI" + where);

        for (double f : {28.0, 73.0})
        {
            const auto fi = fit_fi(gen({f}, [&](double, double d) { return fi_truth(d, t.fi_alpha, t.fi_beta); }));
            v.require(close(fi.alpha_db, t.fi_alpha, tol) && close(fi.beta_slope, t.fi_beta, tol) &&
                          fi.sigma_db <= tol,
                      "FI" + where);
        }

        const auto abg = fit_abg(
            gen({28, 73}, [&](double f, double d) { return abg_truth(f, d, t.abg_a, t.abg_b, t.abg_g); }));
        v.require(close(abg.alpha_dist, t.abg_a, tol) && close(abg.beta_db, t.abg_b, tol) &&
                      close(abg.gamma_freq, t.abg_g, tol) && abg.sigma_db <= tol,
                  "ABG" + where);

        const auto cif = fit_cif(
            gen({28, 73}, [&](double f, double d) { return cif_truth(f, d, t.cif_n, t.cif_b, t.cif_f0); }), t.cif_f0);
        v.require(close(cif.n, t.cif_n, tol) && close(cif.b, t.cif_b, tol) && cif.sigma_db <= tol, "CIF" + where);
    }
    return v;
}

Verdict noisy_recovery()
{
    Verdict v;
    SynthesisSpec spec{CiParams{2.8, 10.1},
                       ScenarioKey{Environment::NLOS, Layout::ClosedPlan, PolarizationClass::VV},
                       {FrequencyCount{Frequency(28), 100000}},
                       {},
                       default_synthesis_seed};
    const auto fit = fit_ci(synthesize(spec));
    v.require(std::abs(fit.ple_n - 2.8) <= 0.05, "n = " + num(fit.ple_n));
    v.require(std::abs(fit.sigma_db - 10.1) <= 0.3, "sigma = " + num(fit.sigma_db));
    return v;
}

Verdict xpd_constant_gap()
{
    Verdict v;
    const CifParams base{3.0, 0.20, 50.0, 10.9};
    const auto cross = make_dataset({28, 73}, log_spaced(3.9, 45.9, 30),
                                    [&](double f, double d) { return cif_truth(f, d, 3.0, 0.20, 50.0) + 13.5; },
                                    Polarization::VH, Environment::NLOS, Layout::ClosedPlan);
    const auto cifx = fit_xpd(base, cross);
    v.require(close(cifx.xpd_db, 13.5, 1e-9), "fitted XPD = " + num(cifx.xpd_db));

    std::mt19937_64 rng(135);
    std::uniform_real_distribution<double> f_ghz(1.0, 100.0), log_d(0.0, 3.0);
    for (int i = 0; i < 100; ++i)
    {
        const Frequency f(f_ghz(rng));
        const double d = std::pow(10.0, log_d(rng));
        const double gap = predict(FittedModel(cifx), f, d) - predict(FittedModel(base), f, d);
        v.require(close(gap, 13.5, 1e-9), "gap " + num(gap) + " at f = " + num(f.ghz()) + ", d = " + num(d));
    }
    return v;
}

Dataset random_dataset(std::mt19937_64 &rng, std::vector<double> freqs)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double n = 1.0 + 3.5 * u(rng);
    const double sigma = 1.0 + 12.0 * u(rng);
    const double tilt = -10.0 + 20.0 * u(rng);
    std::normal_distribution<double> noise(0.0, sigma);
    const std::size_t per = 10 + static_cast<std::size_t>(40 * u(rng));
    Dataset ds;
    for (double f : freqs)
        for (std::size_t i = 0; i < per; ++i)
        {
            const double d = std::pow(10.0, std::log10(3.9) + u(rng) * std::log10(45.9 / 3.9));
            ds.samples.push_back(sample(f, d, ci_truth(f, d, n) + tilt * std::log10(f / 28.0) + noise(rng)));
        }
    return ds;
}

Verdict nesting()
{
    Verdict v;
    std::mt19937_64 rng(1000);
    for (int i = 0; i < 1000; ++i)
    {
        const auto single = random_dataset(rng, {i % 2 ? 73.0 : 28.0});
        const double ci = fit_ci(single).sigma_db, fi = fit_fi(single).sigma_db;
        v.require(fi <= ci + 1e-9, "FI " + num(fi) + " > CI " + num(ci) + " on dataset " + std::to_string(i));
        const auto multi = random_dataset(rng, {28.0, 73.0});
        const double ci_m = fit_ci(multi).sigma_db, abg = fit_abg(multi).sigma_db;
        v.require(abg <= ci_m + 1e-9, "ABG " + num(abg) + " > CI " + num(ci_m) + " on dataset " + std::to_string(i));
    }
    return v;
}

Verdict golden_fidelity()
{
    using namespace published;
    Verdict v;
    struct Case
    {
        int table;
        const std::vector<std::string> *golden;
        std::size_t drop;
    };
    for (const auto &c : {Case{3, &published_table3, 0}, Case{4, &published_table4, 0},
                          Case{5, &published_table5, 1}, Case{6, &published_table6, 1}})
    {
        auto expected = published_rows(*c.golden);
        auto actual = rendered_rows(c.table, c.drop);
        std::sort(expected.begin(), expected.end());
        std::sort(actual.begin(), actual.end());
        v.require(expected.size() == actual.size(), "table " + std::to_string(c.table) + " row count");
        for (std::size_t i = 0; i < std::min(expected.size(), actual.size()); ++i)
            v.require(expected[i] == actual[i],
                      "table " + std::to_string(c.table) + ": rendered '" + actual[i] + "' vs '" + expected[i] + "'");
    }

    const auto presets = select_presets("table3");
    std::size_t checked = 0;
    for (const auto &row : published_table3)
    {
        const auto cells = split(row, "|");
        const double freq = std::stod(cells[0]);
        const double printed = std::stod(cells[9]);
        const ReportEntry *ci = nullptr;
        const ReportEntry *fi = nullptr;
        for (const auto &e : presets.entries)
        {
            const auto &k = e.scenario;
            const std::string pol = k.polarization == PolarizationClass::VV   ? "V-V"
                                    : k.polarization == PolarizationClass::VH ? "V-H"
                                                                              : "Comb.";
            std::string layout(to_string(k.layout));
            std::transform(layout.begin(), layout.end(), layout.begin(), ::tolower);
            if (e.frequencies_ghz.front() != freq || pol != cells[1] || to_string(k.environment) != cells[2] ||
                layout != cells[3])
                continue;
            (family_of(e.model) == ModelFamily::CI ? ci : fi) = &e;
        }
        v.require(ci && fi, "no preset pair for " + row);
        if (!ci || !fi)
            continue;
        const double ds = delta_sigma(*ci, *fi);
        v.require(std::abs(ds - printed) <= 0.05 + 1e-9, "delta sigma " + num(ds) + " vs printed " + cells[9]);
        ++checked;
    }
    v.require(checked == 30, "checked " + std::to_string(checked) + " delta-sigma rows");
    return v;
}

Verdict perturbation_optimality()
{
    Verdict v;
    std::mt19937_64 rng(7);
    const double steps[] = {-0.1, -0.01, 0.01, 0.1};
    auto check = [&](const FittedModel &fit, const std::vector<FittedModel> &perturbed, const Dataset &ds,
                     const std::string &label) {
        const double base = sum_squared_error(fit, ds);
        for (const auto &p : perturbed)
            v.require(sum_squared_error(p, ds) >= base, label + " perturbation lowered SSE");
    };
    for (int i = 0; i < 20; ++i)
    {
        const auto single = random_dataset(rng, {28.0});
        const auto multi = random_dataset(rng, {28.0, 73.0});

        const auto ci = fit_ci(single);
        const auto fi = fit_fi(single);
        const auto abg = fit_abg(multi);
        const auto cif = fit_cif(multi, compute_f0(multi));
        const auto cix = fit_xpd(fit_ci(multi), multi);
        std::vector<FittedModel> p_ci, p_fi, p_abg, p_cif, p_cix;
        for (double e : steps)
        {
            p_ci.push_back(CiParams{ci.ple_n + e, 0});
            p_fi.push_back(FiParams{fi.alpha_db + e, fi.beta_slope, 0});
            p_fi.push_back(FiParams{fi.alpha_db, fi.beta_slope + e, 0});
            p_abg.push_back(AbgParams{abg.alpha_dist + e, abg.beta_db, abg.gamma_freq, 0});
            p_abg.push_back(AbgParams{abg.alpha_dist, abg.beta_db + e, abg.gamma_freq, 0});
            p_abg.push_back(AbgParams{abg.alpha_dist, abg.beta_db, abg.gamma_freq + e, 0});
            p_cif.push_back(CifParams{cif.n + e, cif.b, cif.f0_ghz, 0});
            p_cif.push_back(CifParams{cif.n, cif.b + e, cif.f0_ghz, 0});
            p_cix.push_back(XpdExtension{cix.base, cix.xpd_db + e, 0});
        }
        check(ci, p_ci, single, "CI");
        check(fi, p_fi, single, "FI");
        check(abg, p_abg, multi, "ABG");
        check(cif, p_cif, multi, "CIF");
        check(cix, p_cix, multi, "CIX");
    }
    return v;
}

Verdict f0_rule()
{
    Verdict v;
    for (std::size_t count : {1u, 20u, 333u})
    {
        const auto ds =
            make_dataset({28, 73}, log_spaced(3.9, 45.9, count == 1 ? 2 : count),
                         [](double f, double d) { return ci_truth(f, d, 2.0); });
        const double f0 = compute_f0(ds);
        v.require(f0 == 51.0, "f0 = " + num(f0));
    }
    return v;
}

std::string slurp(const fs::path &path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict pipeline_determinism()
{
    Verdict v;
    std::vector<std::string> artifacts;
    for (int pass = 0; pass < 2; ++pass)
    {
        const auto dir = fs::temp_directory_path() /
                         ("mmwpl-acceptance-" + std::to_string(::getpid()) + "-" + std::to_string(pass));
        fs::create_directories(dir);
        auto p = [&](const char *name) { return (dir / name).string(); };
        std::ostringstream out, err;
        const std::vector<std::vector<std::string>> steps = {
            {"synth", "--model", "CIF", "--n", "3.0", "--b", "0.20", "--f0", "50", "--sigma", "10.9", "--env", "NLOS",
             "--layout", "CP", "--pol", "VV", "--freq", "28:400,73:400", "--seed", "20160515", "--output",
             p("vv.csv")},
            {"synth", "--model", "CIFX", "--n", "3.0", "--b", "0.20", "--f0", "50", "--xpd", "13.5", "--sigma", "10.1",
             "--env", "NLOS", "--layout", "CP", "--pol", "VH", "--freq", "28:400,73:400", "--seed", "20160516",
             "--output", p("vh.csv")},
        };
        for (const auto &args : steps)
            v.require(cli::run(args, out, err) == cli::exit_ok, "synth failed: " + err.str());

        {
            std::ofstream merged(p("all.csv"), std::ios::binary);
            const auto vv = slurp(p("vv.csv"));
            const auto vh = slurp(p("vh.csv"));
            merged << vv << vh.substr(vh.find('\n') + 1);
        }
        v.require(cli::run({"fit", "--input", p("all.csv"), "--output", p("params.json"), "--table", p("fit.txt")},
                           out, err) == cli::exit_ok,
                  "fit failed: " + err.str());
        v.require(cli::run({"report", "--params", p("params.json"), "--output", p("report.txt")}, out, err) ==
                      cli::exit_ok,
                  "report failed: " + err.str());

        std::string bundle;
        for (const char *name : {"vv.csv", "vh.csv", "all.csv", "params.json", "fit.txt", "report.txt"})
            bundle += std::string(name) + "\n" + slurp(dir / name);
        artifacts.push_back(bundle);
        fs::remove_all(dir);
    }
    v.require(artifacts[0].size() > 10000, "artifacts unexpectedly small");
    v.require(artifacts[0] == artifacts[1], "artifacts differ between runs");
    return v;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "FSPL anchors at 1 m", 1.0, fspl_anchors},
        {2, "exact recovery of CI, FI, ABG, CIF in all five scenarios", 5.0, exact_recovery},
        {3, "noisy CI recovery, N = 100000", 10.0, noisy_recovery},
        {4, "CIFX minus CIF is the XPD everywhere", 1.0, xpd_constant_gap},
        {5, "nesting inequalities on 1000 random datasets", 30.0, nesting},
        {6, "published tables and delta sigma reproduced", 5.0, golden_fidelity},
        {7, "fitted parameters minimize SSE under perturbation", 10.0, perturbation_optimality},
        {8, "f0 of equal-count 28/73 GHz data is 51 GHz", 1.0, f0_rule},
        {9, "synth, fit, report is byte-identical across runs", 30.0, pipeline_determinism},
    };

    int failures = 0;
    for (const auto &c : criteria)
    {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try
        {
            v = c.check();
        }
        catch (const std::exception &e)
        {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && elapsed > c.budget_s)
        {
            v.ok = false;
            v.detail = "runtime " + num(elapsed) + " s exceeds " + num(c.budget_s) + " s";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << (v.ok ? "PASS" : "FAIL") << "  AC" << c.id << "  " << c.title << "  (" << elapsed << " s)";
        if (!v.ok)
            line << ": " << v.detail;
        std::cout << line.str() << '\n';
        failures += v.ok ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
              << '\n';
    return failures == 0 ? 0 : 1;
}
