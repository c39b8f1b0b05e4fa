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

#include "mmwpl/estimators.hpp"

#include "mmwpl/errors.hpp"
#include "mmwpl/freespace.hpp"
#include "normal_equations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mmwpl
{

namespace
{

// Relative rank threshold applied to the largest regressor moment.
constexpr double rank_tolerance = 1e-10;
constexpr double zero_ple_tolerance = 1e-9;

void require_fit_input(const Dataset &data, const char *what)
{
    if (data.empty())
        throw DataError("empty-dataset", std::string(what) + ": dataset is empty");
    for (std::size_t i = 0; i < data.size(); ++i)
    {
        const auto v = validate_sample(data.samples[i]);
        if (!v.ok())
            throw DomainError("invalid-sample", std::string(what) + ": sample " + std::to_string(i) + ": " +
                                                    v.violations.front().message);
    }
}

double log_distance_term(double distance_m)
{
    return 10.0 * std::log10(distance_m / reference_distance_m);
}

std::size_t count_distinct(const Dataset &data, double (*key)(const PathLossSample &))
{
    std::vector<double> values;
    values.reserve(data.size());
    for (const auto &s : data.samples)
        values.push_back(key(s));
    std::sort(values.begin(), values.end());
    return static_cast<std::size_t>(std::unique(values.begin(), values.end()) - values.begin());
}

double distance_of(const PathLossSample &s)
{
    return s.distance_m;
}

double frequency_of(const PathLossSample &s)
{
    return s.frequency.ghz();
}

} // namespace

double sum_squared_error(const FittedModel &model, const Dataset &data)
{
    double sse = 0.0;
    for (const auto &s : data.samples)
    {
        const double r = s.path_loss_db - predict(model, s.frequency, s.distance_m);
        sse += r * r;
    }
    return sse;
}

double residual_sigma(const FittedModel &model, const Dataset &data)
{
    if (data.empty())
        throw DataError("empty-dataset", "residual_sigma: dataset is empty");
    return std::sqrt(sum_squared_error(model, data) / static_cast<double>(data.size()));
}

CiParams fit_ci(const Dataset &data)
{
    require_fit_input(data, "fit_ci");
    double sum_ad = 0.0;
    double sum_dd = 0.0;
    for (const auto &s : data.samples)
    {
        const double a = s.path_loss_db - fspl_1m_db(s.frequency);
        const double d = log_distance_term(s.distance_m);
        sum_ad += a * d;
        sum_dd += d * d;
    }
    if (sum_dd <= 0.0)
        throw NumericalError("degenerate-geometry", "fit_ci: every sample lies at the 1 m reference distance");

    CiParams p;
    p.ple_n = sum_ad / sum_dd;
    p.sigma_db = residual_sigma(p, data);
    return p;
}

FiParams fit_fi(const Dataset &data)
{
    require_fit_input(data, "fit_fi");
    if (count_distinct(data, frequency_of) > 1)
        throw DataError("multi-frequency-fi",
                        "fit_fi: floating-intercept has no frequency term; use ABG for multi-frequency data");

    const double n = static_cast<double>(data.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    double moment_x = 0.0;
    for (const auto &s : data.samples)
    {
        const double x = log_distance_term(s.distance_m);
        mean_x += x;
        mean_y += s.path_loss_db;
        moment_x += x * x;
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto &s : data.samples)
    {
        const double dx = log_distance_term(s.distance_m) - mean_x;
        sxx += dx * dx;
        sxy += dx * (s.path_loss_db - mean_y);
    }
    if (!(sxx > rank_tolerance * moment_x))
        throw NumericalError("distance-column-degenerate",
                             "fit_fi: singular design, all samples share one distance");

    FiParams p;
    p.beta_slope = sxy / sxx;
    p.alpha_db = mean_y - p.beta_slope * mean_x;
    p.sigma_db = residual_sigma(p, data);
    return p;
}

AbgParams fit_abg(const Dataset &data)
{
    require_fit_input(data, "fit_abg");
    if (count_distinct(data, distance_of) < 2)
        throw NumericalError("distance-column-degenerate", "fit_abg: distance column degenerate (one distance)");
    if (count_distinct(data, frequency_of) < 2)
        throw NumericalError("frequency-column-degenerate",
                             "fit_abg: frequency column degenerate (single frequency)");

    // Intercept eliminated by centering; the two slopes come from a 2x2
    // system and beta is recovered from the means.
    const double n = static_cast<double>(data.size());
    double mean_d = 0.0;
    double mean_f = 0.0;
    double mean_y = 0.0;
    double moment_d = 0.0;
    double moment_f = 0.0;
    for (const auto &s : data.samples)
    {
        const double d = log_distance_term(s.distance_m);
        const double f = 10.0 * std::log10(s.frequency.ghz());
        mean_d += d;
        mean_f += f;
        mean_y += s.path_loss_db;
        moment_d += d * d;
        moment_f += f * f;
    }
    mean_d /= n;
    mean_f /= n;
    mean_y /= n;

    std::array<std::array<double, 2>, 2> a{};
    std::array<double, 2> rhs{};
    for (const auto &s : data.samples)
    {
        const double dd = log_distance_term(s.distance_m) - mean_d;
        const double df = 10.0 * std::log10(s.frequency.ghz()) - mean_f;
        const double dy = s.path_loss_db - mean_y;
        a[0][0] += dd * dd;
        a[0][1] += dd * df;
        a[1][1] += df * df;
        rhs[0] += dd * dy;
        rhs[1] += df * dy;
    }
    a[1][0] = a[0][1];

    const double threshold = rank_tolerance * std::max(moment_d, moment_f);
    if (!(a[1][1] > threshold))
        throw NumericalError("frequency-column-degenerate", "fit_abg: frequency column degenerate");
    if (!(a[0][0] > threshold))
        throw NumericalError("distance-column-degenerate", "fit_abg: distance column degenerate");
    const auto solved = detail::solve_normal_equations<2>(a, rhs, threshold);
    if (solved.deficient_column)
        throw NumericalError("collinear-regressors",
                             "fit_abg: distance and frequency columns are collinear (every distance has one frequency)");

    AbgParams p;
    p.alpha_dist = solved.x[0];
    p.gamma_freq = solved.x[1];
    p.beta_db = mean_y - p.alpha_dist * mean_d - p.gamma_freq * mean_f;
    p.sigma_db = residual_sigma(p, data);
    return p;
}

double compute_f0(const Dataset &data)
{
    if (data.empty())
        throw DataError("empty-dataset", "compute_f0: dataset is empty");
    double sum = 0.0;
    for (const auto &s : data.samples)
        sum += s.frequency.ghz();
    return std::round(sum / static_cast<double>(data.size()));
}

CifParams fit_cif(const Dataset &data, double f0_ghz)
{
    require_fit_input(data, "fit_cif");
    if (!std::isfinite(f0_ghz) || f0_ghz <= 0.0)
        throw DomainError("f0-domain", "fit_cif: reference frequency f0 must be finite and > 0 GHz");
    if (count_distinct(data, frequency_of) < 2)
        throw NumericalError("frequency-column-degenerate",
                             "fit_cif: frequency column degenerate (needs at least two frequencies)");

    // A_i = 10 D_i u + 10 D_i g_i v, g_i = (f_i - f0) / f0, u = n, v = n b.
    std::array<std::array<double, 2>, 2> a{};
    std::array<double, 2> rhs{};
    for (const auto &s : data.samples)
    {
        const double x1 = log_distance_term(s.distance_m);
        const double x2 = x1 * (s.frequency.ghz() - f0_ghz) / f0_ghz;
        const double y = s.path_loss_db - fspl_1m_db(s.frequency);
        a[0][0] += x1 * x1;
        a[0][1] += x1 * x2;
        a[1][1] += x2 * x2;
        rhs[0] += x1 * y;
        rhs[1] += x2 * y;
    }
    a[1][0] = a[0][1];

    if (a[0][0] <= 0.0)
        throw NumericalError("degenerate-geometry", "fit_cif: every sample lies at the 1 m reference distance");
    const double threshold = rank_tolerance * std::max(a[0][0], a[1][1]);
    if (!(a[1][1] > threshold))
        throw NumericalError("frequency-column-degenerate",
                             "fit_cif: frequency regressor vanishes (all samples at f0)");
    const auto solved = detail::solve_normal_equations<2>(a, rhs, threshold);
    if (solved.deficient_column)
        throw NumericalError("collinear-regressors", "fit_cif: rank-deficient regressors");

    const double u = solved.x[0];
    const double v = solved.x[1];
    if (!(std::abs(u) > zero_ple_tolerance))
        throw NumericalError("zero-ple", "fit_cif: b undefined for zero PLE");

    CifParams p;
    p.n = u;
    p.b = v / u;
    p.f0_ghz = f0_ghz;
    p.sigma_db = residual_sigma(p, data);
    return p;
}

XpdExtension fit_xpd(const CoPolarizedModel &base, const Dataset &cross_data)
{
    require_fit_input(cross_data, "fit_xpd");
    double sum = 0.0;
    for (const auto &s : cross_data.samples)
        sum += s.path_loss_db - predict(base, s.frequency, s.distance_m);

    XpdExtension x{base, sum / static_cast<double>(cross_data.size()), 0.0};
    x.sigma_db = residual_sigma(x, cross_data);
    return x;
}

} // namespace mmwpl
