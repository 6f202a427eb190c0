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

#include <cmath>

namespace fris::specfun {

// K_nu(x) held as value * exp(log_scale) so that large orders at small
// arguments and any order at large arguments stay representable.
struct ScaledBessel {
    double value = 0.0;
    double log_scale = 0.0;

    double log() const { return std::log(value) + log_scale; }
    double unscaled() const { return value * std::exp(log_scale); }
};

/// Bessel function of the first kind, order zero.
/// Power series for |x| <= 8, Miller backward recurrence up to 25 and the
/// Hankel expansion beyond. Absolute error below 1e-12 on |x| <= 1000.
double bessel_j0(double x);

/// Modified Bessel function of the second kind K_nu(x) for integer nu >= 0.
/// K_0 and K_1 come from Chebyshev expansions split at x = 2; higher
/// orders use the upward recurrence, which is stable for K.
/// Throws std::domain_error for x <= 0, nu < 0 or non-finite x.
ScaledBessel bessel_k(int nu, double x);

/// log K_nu(x); convenience wrapper around bessel_k.
double log_bessel_k(int nu, double x);

/// Leading plus subleading small-argument form of K_nu(z), 0 < z <= 0.1:
///   nu = 1:   1/z + (z/2) log(z/2)
///   nu >= 2:  (nu-1)!/2 (2/z)^nu - (nu-2)!/2 (z/2)^(2-nu)
double bessel_k_small(int nu, double z);

/// log Gamma(k) for k > 0.
double ln_gamma(double k);

/// Digamma at a positive integer: psi(n) = -euler_gamma + H_{n-1}.
double digamma_int(int n);

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

} // namespace fris::specfun
