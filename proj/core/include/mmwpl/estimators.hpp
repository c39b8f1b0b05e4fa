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

#ifndef MMWPL_ESTIMATORS_HPP
#define MMWPL_ESTIMATORS_HPP

#include "mmwpl/models.hpp"
#include "mmwpl/taxonomy.hpp"

namespace mmwpl
{

// Closed-form minimum mean square error estimators. Every fit stores the
// population RMSE (SSE / N, not N - 1) of its training residuals as sigma_db.
//
// Degenerate inputs raise NumericalError with codes:
//   "degenerate-geometry"        every sample sits at d = 1 m
//   "distance-column-degenerate" a single distinct distance
//   "frequency-column-degenerate" a single distinct frequency (ABG, CIF)
//   "collinear-regressors"       distance and frequency columns collinear
//   "zero-ple"                   CIF with n ~ 0, so b is undefined
// Empty data raises DataError("empty-dataset").

// n = sum(A_i D_i) / sum(D_i^2) with A_i = PL_i - FSPL(f_i, 1 m) and
// D_i = 10 log10(d_i).
CiParams fit_ci(const Dataset &data);

// Least squares line in 10 log10(d). Refuses multi-frequency data with
// DataError("multi-frequency-fi"); fit ABG instead.
FiParams fit_fi(const Dataset &data);

// Least squares on {10 log10(d), 1, 10 log10(f / 1 GHz)}.
AbgParams fit_abg(const Dataset &data);

// Sample-count weighted mean carrier frequency rounded to the nearest whole
// GHz (halves away from zero).
double compute_f0(const Dataset &data);

// Solved linearly in (n, n b) then mapped back to (n, b).
CifParams fit_cif(const Dataset &data, double f0_ghz);

// MMSE constant offset of cross-polarized data over a frozen co-polarized
// base: the mean residual. The base is copied, never re-fit.
XpdExtension fit_xpd(const CoPolarizedModel &base, const Dataset &cross_data);

// Sum of squared residuals of the deterministic model part.
double sum_squared_error(const FittedModel &model, const Dataset &data);

// sqrt(SSE / N). Throws DataError on empty data.
double residual_sigma(const FittedModel &model, const Dataset &data);

} // namespace mmwpl

#endif
