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

#include "fris/selection.hpp"
#include "fris/errors.hpp"
#include "fris/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace fris {

void SelectionPolicy::validate(const UpaGeometry &g) const
{
    if (m_on < 1 || m_on > g.size())
        throw ConfigError("selection: m_on must lie in [1, " + std::to_string(g.size()) + "], got " +
                          std::to_string(m_on));
    if (!(tau_init > 0.0 && tau_init < 1.0))
        throw ConfigError("selection: tau_init must lie in (0, 1)");
    if (!(relaxation_step > 0.0))
        throw ConfigError("selection: relaxation_step must be > 0");
    if (stencil.empty())
        throw ConfigError("selection: empty stencil");
}

double SelectionPolicy::cap(long k) const
{
    if (relaxation == Relaxation::geometric)
        return tau_init * std::pow(1.0 + relaxation_step, static_cast<double>(k));
    return tau_init + static_cast<double>(k) * relaxation_step;
}

double stencil_max_corr(const UpaGeometry &g, int stride, const std::vector<std::pair<int, int>> &stencil)
{
    if (stride < 1)
        throw std::domain_error("stencil_max_corr: stride must be >= 1");
    double worst = 0.0;
    for (const auto &[p, q] : stencil) {
        const double r = stride * std::sqrt(static_cast<double>(p * p + q * q));
        worst = std::max(worst, std::abs(specfun::bessel_j0(2.0 * std::numbers::pi * g.d_w * r)));
    }
    return worst;
}

bool stencil_cap_satisfied(const UpaGeometry &g, int stride, double tau,
                           const std::vector<std::pair<int, int>> &stencil)
{
    return stencil_max_corr(g, stride, stencil) <= tau;
}

double max_pairwise_corr(const UpaGeometry &g, const std::vector<int> &indices)
{
    double worst = 0.0;
    for (std::size_t a = 0; a < indices.size(); ++a)
        for (std::size_t b = a + 1; b < indices.size(); ++b)
            worst = std::max(worst, std::abs(jakes_correlation(g, indices[a], indices[b])));
    return worst;
}

namespace {

struct Candidate {
    int m;
    double linf;
    double l2;
};

// Keep the m_on lattice points closest to the aperture centre: max-norm
// first so square counts come out as square blocks, then Euclidean, then index.
std::vector<int> closest_to_centre(const UpaGeometry &g, std::vector<int> pool, int m_on)
{
    const double ci = 0.5 * (g.m_x - 1), cj = 0.5 * (g.m_z - 1);
    std::vector<Candidate> c;
    c.reserve(pool.size());
    for (int m : pool) {
        const auto p = delinearize(g, m);
        const double di = p.i - ci, dj = p.j - cj;
        c.push_back({m, std::max(std::abs(di), std::abs(dj)), di * di + dj * dj});
    }
    std::sort(c.begin(), c.end(), [](const Candidate &a, const Candidate &b) {
        if (a.linf != b.linf)
            return a.linf < b.linf;
        if (a.l2 != b.l2)
            return a.l2 < b.l2;
        return a.m < b.m;
    });
    std::vector<int> out;
    for (int k = 0; k < m_on; ++k)
        out.push_back(c[k].m);
    std::sort(out.begin(), out.end());
    return out;
}

double centroid_offset(const UpaGeometry &g, const std::vector<int> &set)
{
    double si = 0.0, sj = 0.0;
    for (int m : set) {
        const auto p = delinearize(g, m);
        si += p.i;
        sj += p.j;
    }
    const double n = static_cast<double>(set.size());
    const double di = si / n - 0.5 * (g.m_x - 1), dj = sj / n - 0.5 * (g.m_z - 1);
    return std::hypot(di, dj);
}

int lattice_capacity(const UpaGeometry &g, int s)
{
    return ((g.m_x + s - 1) / s) * ((g.m_z + s - 1) / s);
}

// Factor pair w x h = n closest to square with w <= max_w, h <= max_h.
bool near_square(int n, int max_w, int max_h, int &w, int &h)
{
    for (int a = static_cast<int>(std::sqrt(static_cast<double>(n))); a >= 1; --a) {
        if (n % a)
            continue;
        const int b = n / a;
        if (a <= max_w && b <= max_h) {
            w = a, h = b;
            return true;
        }
        if (b <= max_w && a <= max_h) {
            w = b, h = a;
            return true;
        }
    }
    return false;
}

// The `count` positions of {start, start+s, ...} < extent nearest the centre.
std::vector<int> nearest_axis(int start, int s, int extent, int count)
{
    std::vector<int> pos;
    for (int v = start; v < extent; v += s)
        pos.push_back(v);
    const double c = 0.5 * (extent - 1);
    std::stable_sort(pos.begin(), pos.end(),
                     [c](int a, int b) { return std::abs(a - c) < std::abs(b - c); });
    pos.resize(count);
    std::sort(pos.begin(), pos.end());
    return pos;
}

std::vector<int> place_lattice(const UpaGeometry &g, int s, int m_on)
{
    std::vector<int> best;
    double best_off = 0.0;
    for (int i0 = 0; i0 < s; ++i0)
        for (int j0 = 0; j0 < s; ++j0) {
            const int nx = (g.m_x - i0 + s - 1) / s, nz = (g.m_z - j0 + s - 1) / s;
            if (nx * nz < m_on)
                continue;
            std::vector<int> set;
            int w = 0, h = 0;
            if (near_square(m_on, nx, nz, w, h)) {
                // rectangular sub-lattice: nearest columns and rows
                for (int j : nearest_axis(j0, s, g.m_z, h))
                    for (int i : nearest_axis(i0, s, g.m_x, w))
                        set.push_back(linearize(g, i, j));
                std::sort(set.begin(), set.end());
            } else {
                std::vector<int> pool;
                for (int j = j0; j < g.m_z; j += s)
                    for (int i = i0; i < g.m_x; i += s)
                        pool.push_back(linearize(g, i, j));
                set = closest_to_centre(g, std::move(pool), m_on);
            }
            const double off = centroid_offset(g, set);
            if (best.empty() || off < best_off - 1e-12) {
                best = std::move(set);
                best_off = off;
            }
        }
    return best;
}

} // namespace

ActiveSet select_fluid(const UpaGeometry &g, const SelectionPolicy &policy)
{
    g.validate();
    policy.validate(g);
    const int m_on = policy.m_on;

    if (m_on == 1) {
        ActiveSet out;
        out.indices = {linearize(g, (g.m_x - 1) / 2, (g.m_z - 1) / 2)};
        out.stride_used = 1;
        out.tau_used = policy.tau_init;
        out.max_corr = 0.0;
        return out;
    }

    int s_max = 0;
    while (lattice_capacity(g, s_max + 1) >= m_on)
        ++s_max;
    std::vector<double> worst(s_max + 1, 0.0);
    for (int s = 1; s <= s_max; ++s)
        worst[s] = stencil_max_corr(g, s, policy.stencil);

    for (long k = 0;; ++k) {
        const double tau = policy.cap(k);
        if (tau >= 1.0)
            break;
        for (int s = 1; s <= s_max; ++s) {
            if (worst[s] > tau)
                continue;
            ActiveSet out;
            out.indices = place_lattice(g, s, m_on);
            out.stride_used = s;
            out.tau_used = tau;
            out.max_corr = max_pairwise_corr(g, out.indices);
            return out;
        }
    }
    throw ConfigError("select_fluid: no stride satisfies the correlation cap below 1 with m_on = " +
                      std::to_string(m_on) + " (m_on too large for the aperture)");
}

ActiveSet select_contiguous(const UpaGeometry &g, int m_on)
{
    g.validate();
    if (m_on < 1 || m_on > g.size())
        throw ConfigError("select_contiguous: m_on must lie in [1, " + std::to_string(g.size()) + "]");

    int w = 0, h = 0;
    if (!near_square(m_on, g.m_x, g.m_z, w, h))
        throw ConfigError("select_contiguous: block of " + std::to_string(m_on) + " elements exceeds the aperture");

    const int i0 = (g.m_x - w) / 2, j0 = (g.m_z - h) / 2;
    ActiveSet out;
    for (int j = j0; j < j0 + h; ++j)
        for (int i = i0; i < i0 + w; ++i)
            out.indices.push_back(linearize(g, i, j));
    out.stride_used = 1;
    out.max_corr = max_pairwise_corr(g, out.indices);
    out.tau_used = out.max_corr;
    return out;
}

ActiveSet select(const UpaGeometry &g, const SelectionPolicy &policy)
{
    if (policy.mode == SelectionMode::contiguous)
        return select_contiguous(g, policy.m_on);
    return select_fluid(g, policy);
}

std::string activation_grid(const UpaGeometry &g, const ActiveSet &set)
{
    std::string rows;
    std::vector<char> on(g.size() + 1, 0);
    for (int m : set.indices)
        on.at(m) = 1;
    for (int j = g.m_z - 1; j >= 0; --j) {
        for (int i = 0; i < g.m_x; ++i)
            rows += on[linearize(g, i, j)] ? '#' : '.';
        rows += '\n';
    }
    return rows;
}

} // namespace fris
