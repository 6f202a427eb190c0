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
#include "fris/linalg.hpp"
#include "fris/selection.hpp"

#include <cstdint>
#include <vector>

namespace fris {

struct CorrelationModel {
    ActiveSet active_set;
    CMatrix matrix; // real symmetric, unit diagonal
};

struct PhaseConfig {
    std::vector<double> phases; // [0, 2 pi)
    std::uint64_t seed = 0;

    static PhaseConfig sample(std::size_t n, std::uint64_t seed);
};

struct Coupling {
    CMatrix a; // R^1/2 Phi R^1/2
    CMatrix c; // A A^H
};

struct SpectralGroup {
    double lambda = 0.0;
    int multiplicity = 0;
};

struct SpectralModel {
    std::vector<SpectralGroup> groups; // descending lambda
    int rank = 0;
    int dimension = 0;   // size of C
    double trace_c = 0.0;
    double cluster_tol = 1e-6;
    double rank_tol = 1e-10;
    double dropped_fraction = 0.0; // dropped eigenvalue mass over trace

    void validate() const;
};

inline constexpr double kDefaultClusterTol = 1e-6;
inline constexpr double kDefaultRankTol = 1e-10;

CorrelationModel build_correlation(const UpaGeometry &g, const ActiveSet &set);
Coupling build_coupling(const CorrelationModel &corr, const PhaseConfig &phase);

// Groups the spectrum of c. Throws DegenerateChannelError when nothing
// survives the rank cut, ConditioningError when the grouped trace drifts.
SpectralModel spectral_group(const CMatrix &c, double cluster_tol = kDefaultClusterTol,
                             double rank_tol = kDefaultRankTol);

} // namespace fris
