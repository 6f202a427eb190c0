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

#include "fris/mixture.hpp"

#include <vector>

namespace fris {

struct LinkBudget {
    double p_tx_w = 1.0;
    double n0_w = 1.0;
    double rho_f = 10.0;
    double rho_u = 10.0;
    double d_f_m = 20.0;
    double d_u_m = 40.0;
    double alpha_f = 2.1;
    double alpha_u = 2.1;
    double r0_bps_hz = 0.1;

    void validate() const;
    double gamma_bar() const { return p_tx_w / n0_w; }
    double l_f() const;
    double l_u() const;
    // gamma_bar * L_f * L_u
    double effective_gain() const { return gamma_bar() * l_f() * l_u(); }
    // copy with p_tx set so that gamma_bar = 10^(db/10)
    LinkBudget at_snr_db(double db) const;
    LinkBudget at_gamma_bar(double gamma) const;
};

// (2^R0 - 1) / (gamma_bar L_f L_u)
double gain_threshold(const LinkBudget &b);

struct OutageResult {
    double exact = 0.0;
    double asymptotic = 0.0;
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
    Regime regime = Regime::general;
};

struct AsymptoticCoefficients {
    double s1 = 0.0, s2 = 0.0, s3 = 0.0;
};

AsymptoticCoefficients asymptotic_coefficients(const MixtureModel &m);

double outage_exact(const MixtureModel &m, const LinkBudget &b);

// Throws UnsupportedRegimeError when the equal / uncorrelated forms are
// requested with multiplicity < 2.
OutageResult outage_asymptotic(const MixtureModel &m, const LinkBudget &b);

// Least-squares slope of -log P_out against log gamma_bar.
double diversity_slope(const MixtureModel &m, const LinkBudget &b, const std::vector<double> &gamma_grid);

struct CapacityResult {
    double value = 0.0;  // bits/s/Hz
    double abserr = 0.0; // achieved error estimate
};

// Quadrature of log2(1 + gamma_bar L_f L_u g) against the mixture density.
CapacityResult ergodic_capacity(const MixtureModel &m, const LinkBudget &b);

// Same quantity from the Mellin-Barnes contour of each mixture term.
CapacityResult ergodic_capacity_contour(const MixtureModel &m, const LinkBudget &b);

// G^{1,4}_{4,2}(x | 1-k, 0, 1, 1 ; 1, 0) / Gamma(k), i.e. E[ln(1 + x T)] for
// T ~ K(k, 1). Evaluated on a vertical contour 0 < Re s < 1.
double meijer_g_log_moment(int k, double x);

// Median of the mixture distribution.
double mixture_median(const MixtureModel &m);

} // namespace fris
