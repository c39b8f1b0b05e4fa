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

#ifndef MMWPL_TOOLS_CLI_HPP
#define MMWPL_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mmwpl::cli
{

// Process exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;     // bad flags or arguments
inline constexpr int exit_data = 3;      // unreadable or invalid input, domain errors
inline constexpr int exit_numerical = 4; // singular or degenerate fits

// Runs one subcommand (fit, predict, synth, report, compare). `args`
// excludes the program name. Primary output goes to `out` unless an
// --output file is given; errors are written to `err` as
// "error[<class>/<code>]: <message>".
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace mmwpl::cli

#endif
