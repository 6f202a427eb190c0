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

#include "fris/mixture.hpp"
#include "fris/errors.hpp"
#include "fris/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fris {

const char *regime_name(Regime r)
{
    switch (r) {
    case Regime::general: return "general";
    case Regime::simple: return "simple";
    case Regime::equal: return "equal";
    case Regime::uncorrelated: return "uncorrelated";
    }
    return "general";
}

Regime regime_from_name(const std::string &s)
{
    if (s == "general") return Regime::general;
    if (s == "simple") return Regime::simple;
    if (s == "equal") return Regime::equal;
    if (s == "uncorrelated") return Regime::uncorrelated;
    throw std::invalid_argument("unknown regime '" + s + "'");
}

namespace {

// Neumaier compensated sum.
struct CompensatedSum {
    double s = 0.0, comp = 0.0;
    void add(double x)
    {
        const double t = s + x;
        if (std::abs(s) >= std::abs(x))
            comp += (s - t) + x;
        else
            comp += (x - t) + s;
        s = t;
    }
    double value() const { return s + comp; }
};

void finish(MixtureModel &m)
{
    std::stable_sort(m.terms.begin(), m.terms.end(),
                     [](const MixtureTerm &a, const MixtureTerm &b) { return std::abs(a.c) > std::abs(b.c); });
    double cmax = 0.0;
    CompensatedSum s;
    for (const auto &t : m.terms) {
        cmax = std::max(cmax, std::abs(t.c));
        s.add(t.c);
    }
    m.condition_estimate = cmax / std::abs(s.value());
    if (m.condition_estimate > 1e12) {
        std::ostringstream os;
        os << "ill-conditioned mixture: condition estimate " << m.condition_estimate
           << "; consider a larger cluster_tol";
        m.warning = os.str();
    }
}

MixtureModel base(const SpectralModel &sp)
{
    sp.validate();
    MixtureModel m;
    m.groups = sp.groups;
    m.dimension = sp.dimension;
    m.rank = sp.rank;
    return m;
}

// Truncated product of (1 - r + r u)^{-m} factors, coefficients of u^0..u^{n-1}.
// Carried in long double: the leading terms cancel heavily for close eigenvalues.
std::vector<double> h_series(const SpectralModel &sp, std::size_t i, int n)
{
    using real = long double;
    std::vector<real> h(n, 0.0L), f(n), prod(n);
    h[0] = 1.0L;
    const real li = sp.groups[i].lambda;
    for (std::size_t j = 0; j < sp.groups.size(); ++j) {
        if (j == i)
            continue;
        const real lj = sp.groups[j].lambda;
        const real a = (li - lj) / li, ratio = lj / (li - lj);
        const int mj = sp.groups[j].multiplicity;
        f[0] = std::pow(a, static_cast<real>(-mj));
        for (int t = 0; t + 1 < n; ++t)
            f[t + 1] = f[t] * (-(static_cast<real>(mj) + t) / (t + 1.0L)) * ratio;
        std::fill(prod.begin(), prod.end(), 0.0L);
        for (int p = 0; p < n; ++p)
            for (int q = 0; p + q < n; ++q)
                prod[p + q] += h[p] * f[q];
        h.swap(prod);
    }
    return std::vector<double>(h.begin(), h.end());
}

} // namespace

MixtureModel coefficients_general(const SpectralModel &sp)
{
    MixtureModel m = base(sp);
    m.regime = Regime::general;
    for (std::size_t i = 0; i < sp.groups.size(); ++i) {
        const int mi = sp.groups[i].multiplicity;
        const auto h = h_series(sp, i, mi);
        for (int k = 1; k <= mi; ++k)
            m.terms.push_back({sp.groups[i].lambda, k, h[mi - k]});
    }
    finish(m);
    return m;
}

MixtureModel coefficients(const SpectralModel &sp)
{
    MixtureModel m = base(sp);
    const std::size_t q = sp.groups.size();

    if (q == 1) {
        const auto &g = sp.groups[0];
        const bool identity = std::abs(g.lambda - 1.0) <= std::max(1e-10, sp.cluster_tol) &&
                              g.multiplicity == sp.dimension;
        m.regime = identity ? Regime::uncorrelated : Regime::equal;
        m.terms.push_back({g.lambda, g.multiplicity, 1.0});
        finish(m);
        return m;
    }

    const bool all_simple = std::all_of(sp.groups.begin(), sp.groups.end(),
                                        [](const SpectralGroup &g) { return g.multiplicity == 1; });
    if (!all_simple)
        return coefficients_general(sp);

    m.regime = Regime::simple;
    for (std::size_t i = 0; i < q; ++i) {
        const long double li = sp.groups[i].lambda;
        long double c = 1.0L;
        for (std::size_t j = 0; j < q; ++j)
            if (j != i)
                c *= li / (li - sp.groups[j].lambda);
        m.terms.push_back({sp.groups[i].lambda, 1, static_cast<double>(c)});
    }
    finish(m);
    return m;
}

double log_sf_k(int k, double lambda, double g)
{
    if (g <= 0.0)
        return 0.0;
    const double x = g / lambda;
    return std::numbers::ln2 - specfun::ln_gamma(k) + 0.5 * k * std::log(x) +
           specfun::log_bessel_k(k, 2.0 * std::sqrt(x));
}

double pdf_k(int k, double lambda, double g)
{
    if (g < 0.0)
        throw std::domain_error("pdf_k: g must be >= 0");
    if (g == 0.0)
        return k == 1 ? std::numeric_limits<double>::infinity() : 1.0 / ((k - 1) * lambda);
    const double x = g / lambda;
    const double lf = std::numbers::ln2 - specfun::ln_gamma(k) - std::log(lambda) + 0.5 * (k - 1) * std::log(x) +
                      specfun::log_bessel_k(k - 1, 2.0 * std::sqrt(x));
    return std::exp(lf);
}

double cdf_k(int k, double lambda, double g)
{
    if (g < 0.0)
        throw std::domain_error("cdf_k: g must be >= 0");
    if (g == 0.0)
        return 0.0;
    const double q = std::exp(log_sf_k(k, lambda, g));
    if (q < 0.9)
        return 1.0 - q;

    // small-x series of 1 - Q; avoids the cancellation in 1 - q
    const double x = g / lambda;
    const int n = k;
    double poly = 0.0;
    double t = 1.0;
    for (int j = 1; j <= n - 1; ++j) {
        t *= x / ((n - j) * static_cast<double>(j)); // ((n-j-1)!/((n-1)! j!)) x^j
        poly += (j % 2 ? t : -t);                     // -(-x)^j
    }
    const double lx = std::log(x);
    double w = std::exp(n * lx - specfun::ln_gamma(n) - specfun::ln_gamma(n + 1.0));
    double psi_a = specfun::digamma_int(1), psi_b = specfun::digamma_int(n + 1);
    double tail = 0.0;
    for (int j = 0; j < 500; ++j) {
        const double term = w * (lx - psi_a - psi_b);
        tail += term;
        if (std::abs(term) <= 1e-18 * std::abs(tail))
            break;
        w *= x / ((j + 1.0) * (n + j + 1.0));
        psi_a += 1.0 / (j + 1.0);
        psi_b += 1.0 / (n + j + 1.0);
    }
    return poly + (n % 2 ? -tail : tail);
}

namespace {

double clamp_checked(double v, double scale, double lo, double hi, const char *what)
{
    const double slack = 1e-12 * std::max(scale, 1e-300);
    if (v < lo) {
        if (lo - v > slack)
            throw ConditioningError(std::string(what) + ": negative excursion beyond rounding; mixture ill-conditioned");
        return lo;
    }
    if (v > hi) {
        if (v - hi > slack)
            throw ConditioningError(std::string(what) + ": excursion above 1 beyond rounding; mixture ill-conditioned");
        return hi;
    }
    return v;
}

// Sums c * f(term) in descending |c| order.
template <class F>
std::pair<double, double> mix(const MixtureModel &m, F f)
{
    CompensatedSum s;
    double scale = 0.0;
    for (const auto &t : m.terms) {
        const double v = t.c * f(t);
        s.add(v);
        scale += std::abs(v);
    }
    return {s.value(), scale};
}

} // namespace

double pdf_g0(const MixtureModel &m, double g)
{
    if (!(g >= 0.0))
        throw std::domain_error("pdf_g0: g must be >= 0");
    if (g == 0.0) {
        if (m.rank < 2)
            return std::numeric_limits<double>::infinity();
        // log singularities cancel (sum of c_{i,1}/lambda_i vanishes), leaving
        // sum c_{i,1} ln(lambda_i)/lambda_i + sum_{k>=2} c_{i,k}/((k-1) lambda_i)
        CompensatedSum s;
        for (const auto &t : m.terms)
            s.add(t.k == 1 ? t.c * std::log(t.lambda) / t.lambda : t.c / ((t.k - 1) * t.lambda));
        return std::max(0.0, s.value());
    }
    const auto [v, scale] = mix(m, [g](const MixtureTerm &t) { return pdf_k(t.k, t.lambda, g); });
    return clamp_checked(v, scale, 0.0, std::numeric_limits<double>::infinity(), "pdf_g0");
}

double cdf_g0(const MixtureModel &m, double g)
{
    if (!(g >= 0.0))
        throw std::domain_error("cdf_g0: g must be >= 0");
    if (g == 0.0)
        return 0.0;
    if (std::isinf(g))
        return 1.0;
    const auto [v, scale] = mix(m, [g](const MixtureTerm &t) { return cdf_k(t.k, t.lambda, g); });
    return clamp_checked(v, scale, 0.0, 1.0, "cdf_g0");
}

double mixture_mean(const MixtureModel &m)
{
    return mix(m, [](const MixtureTerm &t) { return t.k * t.lambda; }).first;
}

double coefficient_sum(const MixtureModel &m)
{
    return mix(m, [](const MixtureTerm &) { return 1.0; }).first;
}

} // namespace fris
