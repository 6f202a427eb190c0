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

#include "fris/linalg.hpp"
#include "fris/metrics.hpp"
#include "fris/mixture.hpp"

#include <cstdint>
#include <vector>

namespace fris {

struct McConfig {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 2026;
    std::size_t batch = 4096; // trials per kernel call
    unsigned threads = 0;     // 0: hardware concurrency

    void validate() const;
};

// One gain sample for trial index `trial`; g_f then g_u are drawn from the
// trial's own counter stream, so any trial can be regenerated in isolation.
double draw_g0(const CMatrix &a, std::uint64_t seed, std::uint64_t trial);

// All trials, in trial order. Bit-identical for any batch size / thread count.
std::vector<double> simulate_g0(const CMatrix &a, const McConfig &mc);

// Deterministic pairwise sum.
double pairwise_sum(const double *x, std::size_t n);

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double v) const { return v >= lo && v <= hi; }
};

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

// Wilson score interval; with zero events the one-sided [0, 1 - alpha^(1/n)]
// bound is returned instead (alpha = 0.05).
Interval wilson_interval(std::uint64_t events, std::uint64_t n, double z = kZ95);

struct CdfPoint {
    double g = 0.0;
    double empirical = 0.0;
    double analytic = 0.0;
};

struct DistributionReport {
    std::uint64_t n = 0;
    double mean = 0.0;
    double variance = 0.0;
    double analytic_mean = 0.0;
    double analytic_variance = 0.0;
    double mean_z = 0.0; // (mean - analytic) / std error
    double ks = 0.0;
    std::vector<CdfPoint> cdf_grid;
};

// Second moment of G0: E[G0^2] = 2 E[T^2] for the conditional exponential.
double mixture_second_moment(const MixtureModel &m);

DistributionReport validate_distribution(const std::vector<double> &samples, const MixtureModel &m,
                                         std::size_t grid_points = 200);

struct MetricsRow {
    double snr_db = 0.0;
    double op_exact = 0.0;
    double op_asymptotic = 0.0;
    double op_mc = 0.0;
    std::uint64_t failures = 0;
    Interval op_ci;
    bool op_one_sided = false;
    double ec_exact = 0.0;
    double ec_contour = 0.0;
    double ec_mc = 0.0;
    Interval ec_ci;
};

// Per-SNR exact metrics plus, when samples are given, MC estimates with
// Wilson 95% (outage) and normal 99% (capacity) intervals.
std::vector<MetricsRow> validate_metrics(const std::vector<double> &samples, const MixtureModel &m,
                                         const LinkBudget &b, const std::vector<double> &snr_grid_db);

// Normalised histogram of the samples on [lo, hi).
std::vector<double> histogram_density(const std::vector<double> &samples, double lo, double hi,
                                      std::size_t bins);

} // namespace fris
