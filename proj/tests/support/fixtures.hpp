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

#ifndef MMWPL_TESTS_FIXTURES_HPP
#define MMWPL_TESTS_FIXTURES_HPP

#include "oracles.hpp"

#include <mmwpl/taxonomy.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace fixtures
{

using namespace mmwpl;

inline PathLossSample sample(double f_ghz, double d_m, double pl_db, Polarization pol = Polarization::VV,
                             Environment env = Environment::NLOS, Layout layout = Layout::Corridor)
{
    return PathLossSample{Frequency(f_ghz), d_m, pl_db, pol, env, layout, std::nullopt, std::nullopt};
}

// n distances spread evenly in log10 over [lo, hi].
inline std::vector<double> log_spaced(double lo, double hi, std::size_t n)
{
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i)
        d[i] = std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * static_cast<double>(i) /
                                                   static_cast<double>(n - 1));
    return d;
}

// Ground-truth mean path loss formulas written independently of the
// library's predict().
inline double ci_truth(double f, double d, double n)
{
    return oracle::friis_db(f, 1.0) + 10.0 * n * std::log10(d);
}

inline double fi_truth(double d, double alpha, double beta)
{
    return alpha + 10.0 * beta * std::log10(d);
}

inline double abg_truth(double f, double d, double alpha, double beta, double gamma)
{
    return 10.0 * alpha * std::log10(d) + beta + 10.0 * gamma * std::log10(f);
}

inline double cif_truth(double f, double d, double n, double b, double f0)
{
    return oracle::friis_db(f, 1.0) + 10.0 * n * (1.0 + b * (f - f0) / f0) * std::log10(d);
}

inline Dataset make_dataset(const std::vector<double> &freqs, const std::vector<double> &distances,
                        const std::function<double(double, double)> &truth, Polarization pol = Polarization::VV,
                        Environment env = Environment::NLOS, Layout layout = Layout::Corridor)
{
    Dataset ds;
    for (double f : freqs)
        for (double d : distances)
            ds.samples.push_back(sample(f, d, truth(f, d), pol, env, layout));
    return ds;
}

// Adds i.i.d. Gaussian noise from a test-local generator.
inline Dataset add_noise(Dataset ds, double sigma, std::mt19937_64 &rng)
{
    std::normal_distribution<double> noise(0.0, sigma);
    for (auto &s : ds.samples)
        s.path_loss_db += noise(rng);
    return ds;
}

} // namespace fixtures

#endif
