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

#include <functional>

namespace fris {

struct QuadResult {
    double value = 0.0;
    double abserr = 0.0;
    int evaluations = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) on [a, b], bisecting the interval
// with the largest error estimate. Throws QuadratureError when the limit on
// subintervals is hit before reaching max(epsabs, epsrel * |I|).
QuadResult integrate_gk15(const std::function<double(double)> &f, double a, double b,
                          double epsabs, double epsrel, int limit = 2000);

// Integral over [a, inf) through g = a + t / (1 - t).
QuadResult integrate_to_infinity(const std::function<double(double)> &f, double a,
                                 double epsabs, double epsrel, int limit = 2000);

} // namespace fris
