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

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"

#include <mmwpl/errors.hpp>
#include <mmwpl/taxonomy.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

using namespace mmwpl;
using fixtures::sample;

TEST_CASE("validate_sample accepts a well-formed sample", "[taxonomy]")
{
    CHECK(validate_sample(sample(28, 10.0, 72.4, Polarization::VV, Environment::NLOS, Layout::Corridor)).ok());
    CHECK(validate_sample(sample(28, 1.0, 61.4)).ok());
}

TEST_CASE("validate_sample reports every violation", "[taxonomy]")
{
    const auto near = validate_sample(sample(28, 0.5, 70.0));
    REQUIRE(near.violations.size() == 1);
    CHECK(near.violations[0].message == "distance below 1 m reference");

    const auto nan_pl = validate_sample(sample(73, 10.0, std::numeric_limits<double>::quiet_NaN()));
    REQUIRE(nan_pl.violations.size() == 1);
    CHECK(nan_pl.violations[0].message == "non-finite path loss");

    const auto both = validate_sample(sample(73, 0.2, -3.0));
    CHECK(both.violations.size() == 2);

    CHECK_FALSE(validate_sample(sample(28, std::numeric_limits<double>::infinity(), 80.0)).ok());
}

TEST_CASE("Frequency rejects non-positive and non-finite values", "[taxonomy]")
{
    CHECK_THROWS_AS(Frequency(0.0), DomainError);
    CHECK_THROWS_AS(Frequency(-28.0), DomainError);
    CHECK_THROWS_AS(Frequency(std::numeric_limits<double>::quiet_NaN()), DomainError);
    CHECK(Frequency(28.0) == Frequency(28.0));
    CHECK(Frequency(28.0) < Frequency(73.0));
    CHECK(Frequency(28.0).hz() == 28e9);
}

TEST_CASE("partition_by_scenario selects by environment, layout and polarization", "[taxonomy]")
{
    Dataset ds;
    for (int i = 0; i < 3; ++i)
        ds.samples.push_back(sample(28, 5.0 + i, 70.0 + i, Polarization::VV, Environment::LOS, Layout::Corridor));
    for (int i = 0; i < 2; ++i)
        ds.samples.push_back(sample(28, 8.0 + i, 90.0 + i, Polarization::VH, Environment::LOS, Layout::Corridor));
    ds.samples.push_back(sample(28, 12.0, 95.0, Polarization::VV, Environment::NLOS, Layout::OpenPlan));

    const auto comb =
        partition_by_scenario(ds, {Environment::LOS, Layout::Corridor, PolarizationClass::Combined});
    CHECK(comb.size() == 5);
    // Order preserved.
    for (std::size_t i = 0; i < comb.size(); ++i)
        CHECK(comb.samples[i].distance_m == ds.samples[i].distance_m);

    CHECK(partition_by_scenario(ds, {Environment::LOS, Layout::Corridor, PolarizationClass::VH}).size() == 2);
    const auto none = partition_by_scenario(ds, {Environment::NLOS, Layout::ClosedPlan, PolarizationClass::VV});
    CHECK(none.empty());
}

TEST_CASE("paper_scenario_set lists the 15 measured keys", "[taxonomy]")
{
    const auto keys = paper_scenario_set();
    REQUIRE(keys.size() == 15);
    CHECK(std::find(keys.begin(), keys.end(),
                    ScenarioKey{Environment::NLOS, Layout::ClosedPlan, PolarizationClass::VH}) != keys.end());
    for (const auto &k : keys)
    {
        CHECK_FALSE((k.environment == Environment::LOS && k.layout == Layout::ClosedPlan));
        CHECK(is_campaign_measured(k.environment, k.layout));
    }
    CHECK_FALSE(is_campaign_measured(Environment::LOS, Layout::ClosedPlan));
    // Deterministic.
    CHECK(keys == paper_scenario_set());
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("VV and VH partitions tile a campaign dataset", "[taxonomy][property]")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick_pair(0, 4), pick_pol(0, 1);
    std::uniform_real_distribution<double> dist(1.0, 50.0);
    const auto keys = paper_scenario_set();

    for (int trial = 0; trial < 25; ++trial)
    {
        Dataset ds;
        const int n = 1 + trial * 7;
        for (int i = 0; i < n; ++i)
        {
            const auto &k = keys[static_cast<std::size_t>(pick_pair(rng)) * 3];
            ds.samples.push_back(sample(i % 2 ? 28 : 73, dist(rng), 60.0 + i,
                                        pick_pol(rng) ? Polarization::VV : Polarization::VH, k.environment,
                                        k.layout));
        }

        std::size_t total = 0;
        for (const auto &k : keys)
        {
            const auto part = partition_by_scenario(ds, k);
            if (k.polarization != PolarizationClass::Combined)
            {
                total += part.size();
                for (const auto &s : part.samples)
                    CHECK(matches(k.polarization, s.polarization));
            }
            else
            {
                const auto vv = partition_by_scenario(ds, {k.environment, k.layout, PolarizationClass::VV});
                const auto vh = partition_by_scenario(ds, {k.environment, k.layout, PolarizationClass::VH});
                CHECK(part.size() == vv.size() + vh.size());
            }
        }
        CHECK(total == ds.size());
    }
}

TEST_CASE("token parsers round-trip the schema codes", "[taxonomy]")
{
    for (auto e : {Environment::LOS, Environment::NLOS})
        CHECK(parse_environment(to_string(e)) == e);
    for (auto l : {Layout::Corridor, Layout::OpenPlan, Layout::ClosedPlan})
        CHECK(parse_layout(to_string(l)) == l);
    for (auto p : {Polarization::VV, Polarization::VH})
        CHECK(parse_polarization(to_string(p)) == p);
    for (auto c : {PolarizationClass::VV, PolarizationClass::VH, PolarizationClass::Combined})
        CHECK(parse_polarization_class(to_string(c)) == c);
    CHECK(parse_layout("cp") == Layout::ClosedPlan);
    CHECK_FALSE(parse_layout("XX"));
    CHECK_FALSE(parse_environment("OLOS"));
    CHECK(to_string(ScenarioKey{Environment::NLOS, Layout::OpenPlan, PolarizationClass::Combined}) == "NLOS:OP:Comb");
}
