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

#ifndef MMWPL_TAXONOMY_HPP
#define MMWPL_TAXONOMY_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mmwpl
{

// Reference distance of the close-in family, meters. All samples must lie at
// or beyond it.
inline constexpr double reference_distance_m = 1.0;

// Carrier frequency in GHz. Construction throws DomainError unless the value
// is finite and strictly positive.
class Frequency
{
  public:
    explicit Frequency(double ghz);

    double ghz() const noexcept { return ghz_; }
    double hz() const noexcept { return ghz_ * 1e9; }

    friend auto operator<=>(const Frequency &, const Frequency &) = default;

  private:
    double ghz_;
};

enum class Environment
{
    LOS,
    NLOS
};

enum class Layout
{
    Corridor,
    OpenPlan,
    ClosedPlan
};

enum class Polarization
{
    VV,
    VH
};

// Dataset-level selection; Combined means VV and VH lumped together.
enum class PolarizationClass
{
    VV,
    VH,
    Combined
};

struct ScenarioKey
{
    Environment environment;
    Layout layout;
    PolarizationClass polarization;

    friend auto operator<=>(const ScenarioKey &, const ScenarioKey &) = default;
};

struct PathLossSample
{
    Frequency frequency;
    double distance_m;
    double path_loss_db;
    Polarization polarization;
    Environment environment;
    Layout layout;
    std::optional<std::string> tx_id;
    std::optional<std::string> rx_id;
};

struct Dataset
{
    std::vector<PathLossSample> samples;
    std::string provenance;

    bool empty() const noexcept { return samples.empty(); }
    std::size_t size() const noexcept { return samples.size(); }
};

struct Violation
{
    std::string code;
    std::string message;
};

struct ValidationResult
{
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

ValidationResult validate_sample(const PathLossSample &sample);

// True when the polarization belongs to the class (Combined admits both).
bool matches(PolarizationClass cls, Polarization pol) noexcept;

// Samples matching environment, layout and polarization class, in input order.
Dataset partition_by_scenario(const Dataset &dataset, const ScenarioKey &key);

// Whether the (environment, layout) pair was part of the measurement
// campaign. LOS closed-plan is representable but was never measured.
bool is_campaign_measured(Environment env, Layout layout) noexcept;

// The five measured (environment, layout) pairs crossed with VV, VH and
// Combined: 15 keys, ordered by pair then polarization class.
std::vector<ScenarioKey> paper_scenario_set();

// Sorted distinct frequencies present in a dataset.
std::vector<Frequency> distinct_frequencies(const Dataset &dataset);

// Tokens used by the CSV schema and the CLI: LOS/NLOS, CO/OP/CP, VV/VH/Comb.
std::string_view to_string(Environment env) noexcept;
std::string_view to_string(Layout layout) noexcept;
std::string_view to_string(Polarization pol) noexcept;
std::string_view to_string(PolarizationClass cls) noexcept;
std::string to_string(const ScenarioKey &key);

// Case-insensitive parsers; nullopt on an unknown token.
std::optional<Environment> parse_environment(std::string_view token);
std::optional<Layout> parse_layout(std::string_view token);
std::optional<Polarization> parse_polarization(std::string_view token);
std::optional<PolarizationClass> parse_polarization_class(std::string_view token);

} // namespace mmwpl

#endif
