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

#include <array>
#include <cstddef>

namespace fris {

// Uniform planar array. Grid coordinates are 0-based, linear indices 1-based
// and row-major: m = i + j * m_x + 1.
struct UpaGeometry {
    int m_x = 20;
    int m_z = 20;
    double d_w = 0.15;      // spacing in wavelengths
    double lambda_c = 0.125; // carrier wavelength [m]

    UpaGeometry() = default;
    UpaGeometry(int mx, int mz, double dw, double lambda);

    void validate() const;
    int size() const { return m_x * m_z; }
    double spacing() const { return d_w * lambda_c; }
};

struct GridPos {
    int i = 0;
    int j = 0;
    bool operator==(const GridPos &) const = default;
};

int linearize(const UpaGeometry &g, int i, int j);
GridPos delinearize(const UpaGeometry &g, int m);

// Position [m] of the element at grid (i, j).
std::array<double, 2> position(const UpaGeometry &g, int i, int j);
std::array<double, 2> position(const UpaGeometry &g, int m);

// Euclidean distance [m]; computed as d * sqrt(p^2 + q^2) from integer offsets.
double distance(const UpaGeometry &g, int m_a, int m_b);

// Jakes correlation between two elements, J0(2 pi r / lambda_c).
double jakes_correlation(const UpaGeometry &g, int m_a, int m_b);

} // namespace fris
