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

#include "fris/channel.hpp"
#include "fris/errors.hpp"
#include "fris/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fris {

PhaseConfig PhaseConfig::sample(std::size_t n, std::uint64_t seed)
{
    PhaseConfig p;
    p.seed = seed;
    CounterStream rs(seed, kStreamPhases, 0);
    p.phases.resize(n);
    for (auto &t : p.phases)
        t = 2.0 * std::numbers::pi * rs.uniform();
    return p;
}

void SpectralModel::validate() const
{
    if (groups.empty())
        throw DegenerateChannelError("spectral model has no groups");
    int r = 0;
    for (const auto &gr : groups) {
        if (!(gr.lambda > 0.0) || gr.multiplicity < 1)
            throw std::domain_error("spectral model: lambdas must be > 0 and multiplicities >= 1");
        r += gr.multiplicity;
    }
    if (r != rank)
        throw std::domain_error("spectral model: multiplicities do not sum to the rank");
    if (dimension > 0 && rank > dimension)
        throw std::domain_error("spectral model: rank exceeds dimension");
}

CorrelationModel build_correlation(const UpaGeometry &g, const ActiveSet &set)
{
    const std::size_t n = set.indices.size();
    CorrelationModel out{set, CMatrix(n, n)};
    for (std::size_t a = 0; a < n; ++a) {
        out.matrix(a, a) = 1.0;
        for (std::size_t b = a + 1; b < n; ++b) {
            const double r = jakes_correlation(g, set.indices[a], set.indices[b]);
            out.matrix(a, b) = r;
            out.matrix(b, a) = r;
        }
    }
    return out;
}

Coupling build_coupling(const CorrelationModel &corr, const PhaseConfig &phase)
{
    const std::size_t n = corr.matrix.rows();
    if (phase.phases.size() != n)
        throw std::invalid_argument("build_coupling: phase vector length does not match the active set");
    const CMatrix root = psd_sqrt(corr.matrix);
    std::vector<cplx> d(n);
    for (std::size_t k = 0; k < n; ++k)
        d[k] = std::polar(1.0, phase.phases[k]);
    Coupling out;
    out.a = root * CMatrix::diagonal(d) * root;
    out.c = out.a * out.a.adjoint();
    for (std::size_t i = 0; i < n; ++i) {
        out.c(i, i) = out.c(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j)
            out.c(j, i) = std::conj(out.c(i, j));
    }
    return out;
}

SpectralModel spectral_group(const CMatrix &c, double cluster_tol, double rank_tol)
{
    if (!(cluster_tol >= 0.0) || !(rank_tol >= 0.0))
        throw std::invalid_argument("spectral_group: tolerances must be >= 0");
    const auto es = eig_hermitian(c);
    SpectralModel sm;
    sm.cluster_tol = cluster_tol;
    sm.rank_tol = rank_tol;
    sm.dimension = static_cast<int>(c.rows());
    sm.trace_c = c.trace().real();

    const double lmax = es.values.empty() ? 0.0 : es.values.front();
    if (!(lmax > 0.0))
        throw DegenerateChannelError("spectral_group: C has no positive eigenvalue");
    const double cut = rank_tol * lmax;

    std::vector<std::vector<double>> clusters;
    double dropped = 0.0;
    for (double v : es.values) {
        if (v <= cut) {
            dropped += v;
            continue;
        }
        if (!clusters.empty()) {
            const double prev = clusters.back().back();
            if ((prev - v) / prev < cluster_tol) {
                clusters.back().push_back(v);
                continue;
            }
        }
        clusters.push_back({v});
    }
    if (clusters.empty())
        throw DegenerateChannelError("spectral_group: all eigenvalues below the rank cut");

    double grouped = 0.0;
    for (const auto &cl : clusters) {
        double s = 0.0;
        for (double v : cl)
            s += v;
        SpectralGroup gr{s / cl.size(), static_cast<int>(cl.size())};
        sm.groups.push_back(gr);
        sm.rank += gr.multiplicity;
        grouped += gr.lambda * gr.multiplicity;
    }
    sm.dropped_fraction = dropped / sm.trace_c;

    const double drift = std::abs(grouped - sm.trace_c) / sm.trace_c;
    if (drift > 1e-8) {
        std::ostringstream os;
        os << "spectral_group: grouped trace drifts from trace(C) by " << drift
           << " relative (cluster_tol=" << cluster_tol << ", rank_tol=" << rank_tol << ")";
        throw ConditioningError(os.str());
    }
    return sm;
}

} // namespace fris
