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

#include "mmwpl/freespace.hpp"

#include "mmwpl/errors.hpp"

#include <cmath>
#include <numbers>

namespace mmwpl
{

double fspl_db(Frequency frequency, double distance_m)
{
    if (!std::isfinite(distance_m) || distance_m <= 0.0)
        throw DomainError("distance-domain", "free-space path loss needs a positive distance");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency.hz() / speed_of_light);
}

} // namespace mmwpl
