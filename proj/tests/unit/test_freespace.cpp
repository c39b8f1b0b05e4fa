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
#include "oracles.hpp"

#include <mmwpl/errors.hpp>
#include <mmwpl/freespace.hpp>

#include <cmath>

using namespace mmwpl;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

// Anchors frozen from a 50-digit evaluation of 20 log10(4 pi f / c).
constexpr double fspl_28ghz_1m = 61.390943848727758;
constexpr double fspl_73ghz_1m = 69.714240424292492;

TEST_CASE("fspl_db matches the Friis oracle at the 1 m anchors", "[freespace]")
{
    CHECK_THAT(oracle::friis_db(28, 1), WithinAbs(fspl_28ghz_1m, 1e-12));
    CHECK_THAT(oracle::friis_db(73, 1), WithinAbs(fspl_73ghz_1m, 1e-12));

    CHECK_THAT(fspl_db(Frequency(28), 1.0), WithinAbs(61.39, 0.01));
    CHECK_THAT(fspl_db(Frequency(73), 1.0), WithinAbs(69.71, 0.01));
    CHECK_THAT(fspl_db(Frequency(28), 1.0), WithinAbs(fspl_28ghz_1m, 1e-12));
    CHECK_THAT(fspl_db(Frequency(73), 1.0), WithinAbs(fspl_73ghz_1m, 1e-12));
    CHECK(fspl_1m_db(Frequency(28)) == fspl_db(Frequency(28), 1.0));
}

TEST_CASE("fspl_db agrees with the oracle across frequency and distance", "[freespace]")
{
    for (double f : {0.9, 2.4, 28.0, 60.0, 73.0, 140.0})
        for (double d : {0.01, 1.0, 3.9, 45.9, 1000.0})
            CHECK_THAT(fspl_db(Frequency(f), d), WithinAbs(oracle::friis_db(f, d), 1e-10));
}

TEST_CASE("fspl_db scales 20 dB per decade of distance and 6.02 dB per octave", "[freespace][property]")
{
    for (double f : {1.0, 28.0, 73.0})
        for (double d : {1.0, 2.5, 17.0, 300.0})
        {
            const double decade = fspl_db(Frequency(f), d * 10.0) - fspl_db(Frequency(f), d);
            CHECK_THAT(decade, WithinRel(20.0, 1e-12));
            const double octave = fspl_db(Frequency(2.0 * f), d) - fspl_db(Frequency(f), d);
            CHECK_THAT(octave, WithinAbs(20.0 * std::log10(2.0), 1e-11));
            CHECK(fspl_db(Frequency(f), d * 1.001) > fspl_db(Frequency(f), d));
            CHECK(fspl_db(Frequency(f * 1.001), d) > fspl_db(Frequency(f), d));
        }
}

TEST_CASE("fspl_db rejects non-positive arguments", "[freespace]")
{
    CHECK_THROWS_AS(fspl_db(Frequency(28), 0.0), DomainError);
    CHECK_THROWS_AS(fspl_db(Frequency(28), -1.0), DomainError);
    CHECK_THROWS_AS(fspl_db(Frequency(-1.0), 1.0), DomainError);
}
