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

#ifndef MMWPL_SRC_NORMAL_EQUATIONS_HPP
#define MMWPL_SRC_NORMAL_EQUATIONS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>

namespace mmwpl::detail
{

template <std::size_t N>
struct NormalSolve
{
    std::array<double, N> x{};
    // Column whose pivot fell under the rank threshold, if any.
    std::optional<std::size_t> deficient_column;
};

// Gaussian elimination with partial pivoting for the small dense systems
// produced by the estimators. A pivot whose magnitude is <= threshold marks
// the system rank deficient; no pseudo-inverse fallback.
template <std::size_t N>
NormalSolve<N> solve_normal_equations(std::array<std::array<double, N>, N> a, std::array<double, N> rhs,
                                      double threshold)
{
    NormalSolve<N> out;
    for (std::size_t k = 0; k < N; ++k)
    {
        std::size_t pivot = k;
        for (std::size_t r = k + 1; r < N; ++r)
            if (std::abs(a[r][k]) > std::abs(a[pivot][k]))
                pivot = r;
        if (!(std::abs(a[pivot][k]) > threshold))
        {
            out.deficient_column = k;
            return out;
        }
        if (pivot != k)
        {
            std::swap(a[pivot], a[k]);
            std::swap(rhs[pivot], rhs[k]);
        }
        for (std::size_t r = k + 1; r < N; ++r)
        {
            const double factor = a[r][k] / a[k][k];
            for (std::size_t c = k; c < N; ++c)
                a[r][c] -= factor * a[k][c];
            rhs[r] -= factor * rhs[k];
        }
    }

    for (std::size_t k = N; k-- > 0;)
    {
        double acc = rhs[k];
        for (std::size_t c = k + 1; c < N; ++c)
            acc -= a[k][c] * out.x[c];
        out.x[k] = acc / a[k][k];
    }
    return out;
}

} // namespace mmwpl::detail

#endif
