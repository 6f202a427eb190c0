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

#include "fris/montecarlo.hpp"
#include "fris/errors.hpp"
#include "fris/rng.hpp"
#include "fris/simd/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

namespace fris {

void McConfig::validate() const
{
    if (batch == 0 || batch % 4 != 0)
        throw ConfigError("mc: batch must be a positive multiple of 4");
}

namespace {

void split(const CMatrix &a, std::vector<double> &re, std::vector<double> &im)
{
    re.resize(a.data().size());
    im.resize(a.data().size());
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        re[k] = a.data()[k].real();
        im[k] = a.data()[k].imag();
    }
}

// Fills trials [first, first + count) into out; count padded to 4 internally.
void run_block(const std::vector<double> &a_re, const std::vector<double> &a_im, std::size_t n,
               std::uint64_t seed, std::uint64_t first, std::size_t count, double *out)
{
    const std::size_t padded = (count + 3) / 4 * 4;
    std::vector<double> fre(n * padded, 0.0), fim(n * padded, 0.0), ure(n * padded, 0.0), uim(n * padded, 0.0);
    for (std::size_t t = 0; t < count; ++t) {
        CounterStream rs(seed, kStreamChannel, first + t);
        for (std::size_t e = 0; e < n; ++e)
            rs.complex_normal(fre[e * padded + t], fim[e * padded + t]);
        for (std::size_t e = 0; e < n; ++e)
            rs.complex_normal(ure[e * padded + t], uim[e * padded + t]);
    }
    std::vector<double> g(padded);
    simd::GainBatch b{n, padded, a_re.data(), a_im.data(), fre.data(), fim.data(), ure.data(), uim.data(), g.data()};
    simd::cascade_gain_batch(b);
    std::copy(g.begin(), g.begin() + count, out);
}

} // namespace

double draw_g0(const CMatrix &a, std::uint64_t seed, std::uint64_t trial)
{
    std::vector<double> re, im;
    split(a, re, im);
    const std::size_t n = a.rows();
    std::vector<double> fre(n * 4, 0.0), fim(n * 4, 0.0), ure(n * 4, 0.0), uim(n * 4, 0.0);
    CounterStream rs(seed, kStreamChannel, trial);
    for (std::size_t e = 0; e < n; ++e)
        rs.complex_normal(fre[e * 4], fim[e * 4]);
    for (std::size_t e = 0; e < n; ++e)
        rs.complex_normal(ure[e * 4], uim[e * 4]);
    double g[4];
    simd::cascade_gain_batch_scalar({n, 4, re.data(), im.data(), fre.data(), fim.data(), ure.data(), uim.data(), g});
    return g[0];
}

std::vector<double> simulate_g0(const CMatrix &a, const McConfig &mc)
{
    mc.validate();
    std::vector<double> re, im;
    split(a, re, im);
    const std::size_t n = a.rows();
    std::vector<double> out(mc.trials);
    const std::uint64_t blocks = (mc.trials + mc.batch - 1) / mc.batch;
    unsigned workers = mc.threads ? mc.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(blocks, 1)));

    auto work = [&](unsigned w) {
        for (std::uint64_t blk = w; blk < blocks; blk += workers) {
            const std::uint64_t first = blk * mc.batch;
            const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(mc.batch, mc.trials - first));
            run_block(re, im, n, mc.seed, first, count, out.data() + first);
        }
    };
    if (workers <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w);
        for (auto &t : pool)
            t.join();
    }
    return out;
}

double pairwise_sum(const double *x, std::size_t n)
{
    if (n <= 64) {
        double s = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            s += x[k];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

Interval wilson_interval(std::uint64_t events, std::uint64_t n, double z)
{
    if (n == 0)
        throw std::invalid_argument("wilson_interval: n must be > 0");
    if (events > n)
        throw std::invalid_argument("wilson_interval: events exceed trials");
    const double nn = static_cast<double>(n);
    if (events == 0)
        return {0.0, 1.0 - std::pow(0.05, 1.0 / nn)};
    const double p = events / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (p + z2 / (2.0 * nn)) / denom;
    const double half = z / denom * std::sqrt(p * (1.0 - p) / nn + z2 / (4.0 * nn * nn));
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

double mixture_second_moment(const MixtureModel &m)
{
    double s = 0.0;
    for (const auto &t : m.terms)
        s += t.c * 2.0 * t.k * (t.k + 1.0) * t.lambda * t.lambda;
    return s;
}

DistributionReport validate_distribution(const std::vector<double> &samples, const MixtureModel &m,
                                         std::size_t grid_points)
{
    if (samples.empty())
        throw std::invalid_argument("validate_distribution: no samples");
    DistributionReport r;
    r.n = samples.size();
    const double nn = static_cast<double>(r.n);
    r.mean = pairwise_sum(samples.data(), samples.size()) / nn;
    std::vector<double> dev(samples.size());
    for (std::size_t k = 0; k < samples.size(); ++k)
        dev[k] = (samples[k] - r.mean) * (samples[k] - r.mean);
    r.variance = pairwise_sum(dev.data(), dev.size()) / (nn - 1.0 > 0 ? nn - 1.0 : 1.0);
    r.analytic_mean = mixture_mean(m);
    r.analytic_variance = mixture_second_moment(m) - r.analytic_mean * r.analytic_mean;
    r.mean_z = (r.mean - r.analytic_mean) / std::sqrt(r.variance / nn);

    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    double d = 0.0;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        const double f = cdf_g0(m, sorted[k]);
        d = std::max(d, std::max(f - k / nn, (k + 1) / nn - f));
    }
    r.ks = d;

    // evenly spaced empirical quantiles
    for (std::size_t q = 1; q <= grid_points; ++q) {
        const std::size_t idx = std::min(sorted.size() - 1, q * sorted.size() / (grid_points + 1));
        const double g = sorted[idx];
        const double emp = static_cast<double>(std::upper_bound(sorted.begin(), sorted.end(), g) - sorted.begin()) / nn;
        r.cdf_grid.push_back({g, emp, cdf_g0(m, g)});
    }
    return r;
}

std::vector<MetricsRow> validate_metrics(const std::vector<double> &samples, const MixtureModel &m,
                                         const LinkBudget &b, const std::vector<double> &snr_grid_db)
{
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    const double nn = static_cast<double>(sorted.size());
    std::vector<double> buf(sorted.size());

    std::vector<MetricsRow> rows;
    for (double db : snr_grid_db) {
        const LinkBudget bb = b.at_snr_db(db);
        MetricsRow row;
        row.snr_db = db;
        row.op_exact = outage_exact(m, bb);
        try {
            row.op_asymptotic = outage_asymptotic(m, bb).asymptotic;
        } catch (const UnsupportedRegimeError &) {
            row.op_asymptotic = std::nan("");
        }
        row.ec_exact = ergodic_capacity(m, bb).value;
        row.ec_contour = ergodic_capacity_contour(m, bb).value;
        if (!sorted.empty()) {
            const double rt = gain_threshold(bb);
            row.failures = static_cast<std::uint64_t>(std::lower_bound(sorted.begin(), sorted.end(), rt) - sorted.begin());
            row.op_mc = row.failures / nn;
            row.op_ci = wilson_interval(row.failures, sorted.size());
            row.op_one_sided = row.failures == 0;

            const double a = bb.effective_gain();
            for (std::size_t k = 0; k < samples.size(); ++k)
                buf[k] = std::log1p(a * samples[k]) / std::numbers::ln2;
            const double mean = pairwise_sum(buf.data(), buf.size()) / nn;
            for (auto &v : buf)
                v = (v - mean) * (v - mean);
            const double sd = std::sqrt(pairwise_sum(buf.data(), buf.size()) / (nn - 1.0));
            row.ec_mc = mean;
            row.ec_ci = {mean - kZ99 * sd / std::sqrt(nn), mean + kZ99 * sd / std::sqrt(nn)};
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<double> histogram_density(const std::vector<double> &samples, double lo, double hi, std::size_t bins)
{
    if (!(hi > lo) || bins == 0)
        throw std::invalid_argument("histogram_density: bad range");
    std::vector<double> h(bins, 0.0);
    const double w = (hi - lo) / bins;
    for (double s : samples) {
        if (s < lo || s >= hi)
            continue;
        h[std::min(bins - 1, static_cast<std::size_t>((s - lo) / w))] += 1.0;
    }
    for (auto &v : h)
        v /= samples.size() * w;
    return h;
}

} // namespace fris
