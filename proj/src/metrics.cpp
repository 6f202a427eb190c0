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

#include "fris/metrics.hpp"
#include "fris/errors.hpp"
#include "fris/quadrature.hpp"
#include "fris/specfun.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace fris {

void LinkBudget::validate() const
{
    const double v[] = {p_tx_w, n0_w, rho_f, rho_u, d_f_m, d_u_m, alpha_f, alpha_u};
    for (double x : v)
        if (!(x > 0.0) || !std::isfinite(x))
            throw ConfigError("link budget: powers, gains, distances and exponents must be finite and > 0");
    if (!(r0_bps_hz >= 0.0) || !std::isfinite(r0_bps_hz))
        throw ConfigError("link budget: r0_bps_hz must be >= 0");
}

double LinkBudget::l_f() const { return rho_f * std::pow(d_f_m, -alpha_f); }
double LinkBudget::l_u() const { return rho_u * std::pow(d_u_m, -alpha_u); }

LinkBudget LinkBudget::at_snr_db(double db) const
{
    return at_gamma_bar(std::pow(10.0, db / 10.0));
}

LinkBudget LinkBudget::at_gamma_bar(double gamma) const
{
    LinkBudget b = *this;
    b.p_tx_w = gamma * n0_w;
    return b;
}

double gain_threshold(const LinkBudget &b)
{
    return std::expm1(b.r0_bps_hz * std::numbers::ln2) / b.effective_gain();
}

AsymptoticCoefficients asymptotic_coefficients(const MixtureModel &m)
{
    AsymptoticCoefficients s;
    for (const auto &t : m.terms) {
        if (t.k == 1) {
            s.s1 += t.c / t.lambda;
            s.s2 += t.c * std::log(t.lambda) / t.lambda;
        } else {
            s.s3 += t.c / ((t.k - 1) * t.lambda);
        }
    }
    return s;
}

double outage_exact(const MixtureModel &m, const LinkBudget &b)
{
    return cdf_g0(m, gain_threshold(b));
}

OutageResult outage_asymptotic(const MixtureModel &m, const LinkBudget &b)
{
    OutageResult r;
    r.regime = m.regime;
    r.exact = outage_exact(m, b);
    const auto s = asymptotic_coefficients(m);
    r.s1 = s.s1;
    r.s2 = s.s2;
    r.s3 = s.s3;
    const double num = std::expm1(b.r0_bps_hz * std::numbers::ln2);
    const double lflu = b.l_f() * b.l_u();
    const double gbar = b.gamma_bar();
    const double rt = num / (lflu * gbar);

    switch (m.regime) {
    case Regime::uncorrelated:
        if (m.dimension < 2)
            throw UnsupportedRegimeError("outage_asymptotic: uncorrelated form needs M_on >= 2");
        r.asymptotic = rt / (m.dimension - 1);
        break;
    case Regime::equal: {
        const auto &g = m.groups.front();
        if (g.multiplicity < 2)
            throw UnsupportedRegimeError("outage_asymptotic: equal-eigenvalue form needs multiplicity >= 2");
        r.asymptotic = rt / ((g.multiplicity - 1) * g.lambda);
        break;
    }
    case Regime::simple:
        r.asymptotic = rt * (s.s1 * std::log(gbar) - s.s1 * std::log(num / lflu) + s.s2);
        break;
    case Regime::general:
        r.asymptotic = rt * (s.s1 * std::log(gbar) - s.s1 * std::log(num / lflu) + s.s2 + s.s3);
        break;
    }
    return r;
}

double diversity_slope(const MixtureModel &m, const LinkBudget &b, const std::vector<double> &gamma_grid)
{
    if (gamma_grid.size() < 3)
        throw std::invalid_argument("diversity_slope: need at least 3 grid points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double g : gamma_grid) {
        const double p = outage_exact(m, b.at_gamma_bar(g));
        if (!(p > 0.0) || !std::isnormal(p))
            throw std::range_error("diversity_slope: outage underflows on the grid; shrink the grid");
        const double x = std::log(g), y = -std::log(p);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double n = static_cast<double>(gamma_grid.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double mixture_median(const MixtureModel &m)
{
    double mean = mixture_mean(m);
    double lo = 0.0, hi = std::max(mean, 1e-300);
    while (cdf_g0(m, hi) < 0.5)
        hi *= 2.0;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        (cdf_g0(m, mid) < 0.5 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

CapacityResult ergodic_capacity(const MixtureModel &m, const LinkBudget &b)
{
    const double a = b.effective_gain();
    if (a == 0.0)
        return {0.0, 0.0};
    const double med = mixture_median(m);
    auto f = [&](double g) {
        if (g <= 0.0)
            return 0.0;
        return std::log1p(a * g) * pdf_g0(m, g);
    };
    const double epsrel = 1e-10;
    const auto head = integrate_gk15(f, 0.0, med, 0.0, epsrel);
    const auto tail = integrate_to_infinity(f, med, 0.0, epsrel);
    return {(head.value + tail.value) / std::numbers::ln2, (head.abserr + tail.abserr) / std::numbers::ln2};
}

namespace {

using cd = std::complex<double>;

// log Gamma(z) for Re z > 0, up to a multiple of 2 pi i.
cd lgamma_complex(cd z)
{
    cd shift = 0.0;
    while (z.real() < 15.0) {
        shift += std::log(z);
        z += 1.0;
    }
    static constexpr double b[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
                                   1.0 / 1188, -691.0 / 360360, 1.0 / 156, -3617.0 / 122400};
    const cd iz = 1.0 / z, iz2 = iz * iz;
    cd series = 0.0, p = iz;
    for (double c : b) {
        series += c * p;
        p *= iz2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series - shift;
}

} // namespace

double meijer_g_log_moment(int k, double x)
{
    if (k < 1)
        throw std::domain_error("meijer_g_log_moment: k must be >= 1");
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("meijer_g_log_moment: x must be finite and > 0");

    const double lx = std::log(x);
    double c = 0.5;
    if (lx > 1.0)
        c = std::max(0.05, 1.0 / lx);
    else if (lx < -1.0)
        c = 1.0 - std::max(0.05, 1.0 / -lx);
    const double lgk = specfun::ln_gamma(k);

    auto logf = [&](double t) {
        const cd s(c, t);
        return 2.0 * lgamma_complex(s) + lgamma_complex(1.0 - s) + lgamma_complex(s + static_cast<double>(k)) - lgk +
               s * lx;
    };
    auto re_f = [&](double t) { return std::exp(logf(t)).real(); };

    // truncation point: past the peak and 1e-18 below it
    double peak = -1e300, t_end = 0.0;
    for (double t = 0.0;; t += 0.25) {
        const double lm = logf(t).real();
        peak = std::max(peak, lm);
        if (lm < peak - 41.5 && t > 1.0) {
            t_end = t;
            break;
        }
        if (t > 1e4)
            throw QuadratureError("meijer_g_log_moment: integrand does not decay", 0.0);
    }

    int n = 64;
    double h = t_end / n;
    double sum = 0.5 * (re_f(0.0) + re_f(t_end));
    for (int j = 1; j < n; ++j)
        sum += re_f(j * h);
    double prev = sum * h;
    for (int level = 0; level < 22; ++level) {
        for (int j = 0; j < n; ++j)
            sum += re_f((2 * j + 1) * 0.5 * h);
        n *= 2;
        h *= 0.5;
        const double cur = sum * h;
        if (std::abs(cur - prev) <= 1e-11 * std::abs(cur) && level >= 2)
            return cur / std::numbers::pi;
        prev = cur;
    }
    std::ostringstream os;
    os << "meijer_g_log_moment: trapezoid refinement stalled at k=" << k << ", x=" << x;
    throw QuadratureError(os.str(), std::abs(prev));
}

CapacityResult ergodic_capacity_contour(const MixtureModel &m, const LinkBudget &b)
{
    const double a = b.effective_gain();
    double s = 0.0, comp = 0.0, scale = 0.0;
    for (const auto &t : m.terms) {
        const double v = t.c * meijer_g_log_moment(t.k, a * t.lambda);
        const double y = v - comp;
        const double z = s + y;
        comp = (z - s) - y;
        s = z;
        scale += std::abs(v);
    }
    return {s / std::numbers::ln2, 1e-9 * scale / std::numbers::ln2};
}

} // namespace fris
