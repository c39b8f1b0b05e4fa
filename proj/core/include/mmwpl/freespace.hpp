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

#ifndef MMWPL_FREESPACE_HPP
#define MMWPL_FREESPACE_HPP

#include "mmwpl/taxonomy.hpp"

namespace mmwpl
{

// Speed of light in vacuum, m/s (exact SI value).
inline constexpr double speed_of_light = 299792458.0;

// Friis free-space path loss between isotropic antennas:
// 20 log10(4 pi d f / c) dB with f in Hz. Throws DomainError for d <= 0.
double fspl_db(Frequency frequency, double distance_m);

// FSPL at the 1 m close-in reference distance.
inline double fspl_1m_db(Frequency frequency)
{
    return fspl_db(frequency, reference_distance_m);
}

} // namespace mmwpl

#endif
