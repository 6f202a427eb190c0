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

#include "fris/quadrature.hpp"
#include "fris/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

namespace fris {

namespace {

// QUADPACK qk15 abscissae and weights.
constexpr double xgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                           0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                           0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                           0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double wgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                           0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                           0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                           0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double wg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                          0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, err;
    bool operator<(const Segment &o) const { return err < o.err; }
};

Segment qk15(const std::function<double(double)> &f, double a, double b)
{
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = fc * wgk[7];
    double resg = fc * wg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * xgk[j];
        const double s = f(c - dx) + f(c + dx);
        resk += wgk[j] * s;
        if (j % 2 == 1)
            resg += wg[j / 2] * s;
    }
    return {a, b, resk * h, std::abs((resk - resg) * h)};
}

} // namespace

QuadResult integrate_gk15(const std::function<double(double)> &f, double a, double b,
                          double epsabs, double epsrel, int limit)
{
    std::priority_queue<Segment> heap;
    Segment first = qk15(f, a, b);
    heap.push(first);
    double total = first.value, err = first.err;
    int evals = 15;
    int segments = 1;
    while (err > std::max(epsabs, epsrel * std::abs(total))) {
        if (segments >= limit) {
            std::ostringstream os;
            os << "integrate_gk15: no convergence on [" << a << ", " << b << "] after " << segments
               << " subintervals, error estimate " << err;
            throw QuadratureError(os.str(), err);
        }
        const Segment s = heap.top();
        heap.pop();
        const double m = 0.5 * (s.a + s.b);
        if (!(m > s.a && m < s.b)) {
            std::ostringstream os;
            os << "integrate_gk15: interval collapsed near " << m << ", error estimate " << err;
            throw QuadratureError(os.str(), err);
        }
        const Segment l = qk15(f, s.a, m), r = qk15(f, m, s.b);
        evals += 30;
        ++segments;
        heap.push(l);
        heap.push(r);
        // recompute to avoid drift from repeated add/subtract
        total = 0.0;
        err = 0.0;
        auto copy = heap;
        while (!copy.empty()) {
            total += copy.top().value;
            err += copy.top().err;
            copy.pop();
        }
    }
    return {total, err, evals};
}

QuadResult integrate_to_infinity(const std::function<double(double)> &f, double a,
                                 double epsabs, double epsrel, int limit)
{
    auto mapped = [&](double t) {
        if (t >= 1.0)
            return 0.0;
        const double u = 1.0 - t;
        return f(a + t / u) / (u * u);
    };
    return integrate_gk15(mapped, 0.0, 1.0, epsabs, epsrel, limit);
}

} // namespace fris
