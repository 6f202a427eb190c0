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

#include <complex>
#include <cstddef>
#include <vector>

namespace fris {

using cplx = std::complex<double>;

// Dense row-major complex matrix.
class CMatrix
{
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<cplx> &d);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    cplx &operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const cplx &operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<cplx> &data() const { return a_; }

    CMatrix adjoint() const;
    double frobenius() const;
    cplx trace() const;

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<cplx> a_;
};

CMatrix operator*(const CMatrix &a, const CMatrix &b);
CMatrix operator-(const CMatrix &a, const CMatrix &b);

struct EigenSystem {
    std::vector<double> values; // descending
    CMatrix vectors;            // eigenvectors in columns, unitary
};

// Largest deviation |a_ij - conj(a_ji)|.
double hermitian_defect(const CMatrix &a);

// Cyclic complex Jacobi on the Hermitian input. Throws std::domain_error when
// the input deviates from Hermitian by more than 1e-12 relative.
EigenSystem eig_hermitian(const CMatrix &a);

// PSD square root; eigenvalues down to -1e-10 ||a||_F are clamped to zero.
CMatrix psd_sqrt(const CMatrix &a);

// v^H a v, real part.
double quadratic_form(const std::vector<cplx> &v, const CMatrix &a);

} // namespace fris
