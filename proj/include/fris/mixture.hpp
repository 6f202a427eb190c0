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

#include "fris/channel.hpp"

#include <string>
#include <vector>

namespace fris {

enum class Regime { general, simple, equal, uncorrelated };

const char *regime_name(Regime r);
Regime regime_from_name(const std::string &s);

struct MixtureTerm {
    double lambda = 0.0;
    int k = 1;
    double c = 0.0;
};

struct MixtureModel {
    std::vector<MixtureTerm> terms; // sorted by descending |c|
    std::vector<SpectralGroup> groups;
    Regime regime = Regime::general;
    int dimension = 0;
    int rank = 0;
    double condition_estimate = 1.0; // max |c| / |sum c|
    std::string warning;
};

// Partial-fraction coefficients of the K-mixture for the given spectrum.
MixtureModel coefficients(const SpectralModel &spectral);

// Same, but always through the repeated-pole series path (used to check
// the closed forms of the special regimes).
MixtureModel coefficients_general(const SpectralModel &spectral);

// Single K(k, lambda) term.
double pdf_k(int k, double lambda, double g);
double cdf_k(int k, double lambda, double g);
// Survival 1 - F as its natural log.
double log_sf_k(int k, double lambda, double g);

double pdf_g0(const MixtureModel &m, double g);
double cdf_g0(const MixtureModel &m, double g);
double mixture_mean(const MixtureModel &m);
double coefficient_sum(const MixtureModel &m);

} // namespace fris
