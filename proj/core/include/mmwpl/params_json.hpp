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

#ifndef MMWPL_PARAMS_JSON_HPP
#define MMWPL_PARAMS_JSON_HPP

#include "mmwpl/report.hpp"

#include <string>
#include <string_view>

namespace mmwpl
{

inline constexpr int params_schema_version = 1;

// Canonical JSON for a fit report: fixed key order, shortest round-trip
// numbers, two-space indentation, trailing newline. FI entries with a CI
// partner on the same sample set also carry a derived "delta_sigma_db".
std::string write_params_json(const FitReport &report);

// Inverse of write_params_json. Derived fields are ignored on input.
// Throws DataError for malformed documents or an unsupported
// schema_version.
FitReport read_params_json(std::string_view text);

} // namespace mmwpl

#endif
