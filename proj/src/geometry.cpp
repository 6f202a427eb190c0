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

#include "fris/geometry.hpp"
#include "fris/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fris {

UpaGeometry::UpaGeometry(int mx, int mz, double dw, double lambda)
    : m_x(mx), m_z(mz), d_w(dw), lambda_c(lambda)
{
    validate();
}

void UpaGeometry::validate() const
{
    if (m_x < 1 || m_z < 1)
        throw std::domain_error("UpaGeometry: m_x and m_z must be >= 1");
    if (!(d_w > 0.0) || !std::isfinite(d_w))
        throw std::domain_error("UpaGeometry: d_w must be > 0");
    if (!(lambda_c > 0.0) || !std::isfinite(lambda_c))
        throw std::domain_error("UpaGeometry: lambda_c must be > 0");
}

int linearize(const UpaGeometry &g, int i, int j)
{
    if (i < 0 || i >= g.m_x || j < 0 || j >= g.m_z)
        throw std::domain_error("linearize: (" + std::to_string(i) + "," + std::to_string(j) + ") outside grid");
    return i + j * g.m_x + 1;
}

GridPos delinearize(const UpaGeometry &g, int m)
{
    if (m < 1 || m > g.size())
        throw std::domain_error("delinearize: index " + std::to_string(m) + " outside [1, M]");
    return {(m - 1) % g.m_x, (m - 1) / g.m_x};
}

std::array<double, 2> position(const UpaGeometry &g, int i, int j)
{
    linearize(g, i, j); // range check
    const double d = g.spacing();
    return {i * d, j * d};
}

std::array<double, 2> position(const UpaGeometry &g, int m)
{
    const auto p = delinearize(g, m);
    return position(g, p.i, p.j);
}

namespace {
long offset_sq(const UpaGeometry &g, int m_a, int m_b)
{
    const auto a = delinearize(g, m_a);
    const auto b = delinearize(g, m_b);
    const long p = a.i - b.i, q = a.j - b.j;
    return p * p + q * q;
}
} // namespace

double distance(const UpaGeometry &g, int m_a, int m_b)
{
    return g.spacing() * std::sqrt(static_cast<double>(offset_sq(g, m_a, m_b)));
}

double jakes_correlation(const UpaGeometry &g, int m_a, int m_b)
{
    const double r = std::sqrt(static_cast<double>(offset_sq(g, m_a, m_b)));
    return specfun::bessel_j0(2.0 * std::numbers::pi * g.d_w * r);
}

} // namespace fris
