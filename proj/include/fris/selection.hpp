// SPDX-License-Identifier: Apache-2.0
//
// fris-stats: exact cascaded-channel statistics for fluid and conventional RIS
// Copyright (C) 2026 The fris-stats authors
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

#pragma once

#include "fris/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fris {

enum class SelectionMode { fluid, contiguous };

// Cap schedule: additive tau_k = tau_init + k * step,
// geometric tau_k = tau_init * (1 + step)^k.
enum class Relaxation { additive, geometric };

struct SelectionPolicy {
    SelectionMode mode = SelectionMode::fluid;
    int m_on = 25;
    double tau_init = 0.3;
    double relaxation_step = 0.001;
    Relaxation relaxation = Relaxation::additive;
    std::vector<std::pair<int, int>> stencil = default_stencil();

    static std::vector<std::pair<int, int>> default_stencil()
    {
        return {{1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}};
    }
    void validate(const UpaGeometry &g) const;
    double cap(long k) const;
};

struct ActiveSet {
    std::vector<int> indices; // 1-based linear indices, strictly increasing
    int stride_used = 1;
    double tau_used = 0.0;
    double max_corr = 0.0; // max pairwise |J0| over the set, 0 for a singleton
};

// Largest |J0| over the stencil offsets scaled by the stride.
double stencil_max_corr(const UpaGeometry &g, int stride,
                        const std::vector<std::pair<int, int>> &stencil = SelectionPolicy::default_stencil());

bool stencil_cap_satisfied(const UpaGeometry &g, int stride, double tau,
                           const std::vector<std::pair<int, int>> &stencil = SelectionPolicy::default_stencil());

ActiveSet select_fluid(const UpaGeometry &g, const SelectionPolicy &policy);
ActiveSet select_contiguous(const UpaGeometry &g, int m_on);
ActiveSet select(const UpaGeometry &g, const SelectionPolicy &policy);

// Max pairwise |J0| over a set of linear indices.
double max_pairwise_corr(const UpaGeometry &g, const std::vector<int> &indices);

// One text row per j (top row j = m_z - 1), '#' active, '.' idle.
std::string activation_grid(const UpaGeometry &g, const ActiveSet &set);

} // namespace fris
