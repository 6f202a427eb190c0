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

#include "fris/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fris {

CMatrix CMatrix::identity(std::size_t n)
{
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(const std::vector<cplx> &d)
{
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

CMatrix CMatrix::adjoint() const
{
    CMatrix t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            t(j, i) = std::conj((*this)(i, j));
    return t;
}

double CMatrix::frobenius() const
{
    double s = 0.0;
    for (const auto &z : a_)
        s += std::norm(z);
    return std::sqrt(s);
}

cplx CMatrix::trace() const
{
    cplx t = 0.0;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i)
        t += (*this)(i, i);
    return t;
}

CMatrix operator*(const CMatrix &a, const CMatrix &b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: dimension mismatch");
    CMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

CMatrix operator-(const CMatrix &a, const CMatrix &b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference: dimension mismatch");
    CMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c(i, j) = a(i, j) - b(i, j);
    return c;
}

double hermitian_defect(const CMatrix &a)
{
    if (!a.square())
        throw std::domain_error("hermitian_defect: matrix not square");
    double d = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
    return d;
}

EigenSystem eig_hermitian(const CMatrix &in)
{
    if (!in.square())
        throw std::domain_error("eig_hermitian: matrix not square");
    const std::size_t n = in.rows();
    const double norm = in.frobenius();
    if (hermitian_defect(in) > 1e-12 * std::max(1.0, norm))
        throw std::domain_error("eig_hermitian: input is not Hermitian");

    CMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = in(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = 0.5 * (in(i, j) + std::conj(in(j, i)));
            a(j, i) = std::conj(a(i, j));
        }
    }
    CMatrix v = CMatrix::identity(n);

    // Rotate while an off-diagonal entry is significant relative to its
    // diagonal pair; tiny eigenvalues keep relative accuracy this way.
    const double abs_floor = 1e-22 * norm;
    bool rotated = true;
    int sweep = 0;
    while (rotated) {
        rotated = false;
        if (++sweep > 100)
            throw std::runtime_error("eig_hermitian: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag == 0.0)
                    continue;
                const double app = a(p, p).real(), aqq = a(q, q).real();
                if (mag <= abs_floor || mag <= 1e-17 * std::sqrt(std::abs(app) * std::abs(aqq))) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                rotated = true;
                const cplx ph = a(p, q) / mag; // e^{i phi}
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx phc = std::conj(ph);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * phc * akq;
                    a(k, q) = s * akp + c * phc * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * ph * aqk;
                    a(q, k) = s * apk + c * ph * aqk;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * phc * vkq;
                    v(k, q) = s * vkp + c * phc * vkq;
                }
            }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    EigenSystem es;
    es.values.resize(n);
    es.vectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            es.vectors(i, k) = v(i, order[k]);
    }
    return es;
}

CMatrix psd_sqrt(const CMatrix &a)
{
    const auto es = eig_hermitian(a);
    const std::size_t n = a.rows();
    const double floor = -1e-10 * a.frobenius();
    std::vector<double> root(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (es.values[k] < floor)
            throw std::domain_error("psd_sqrt: matrix is indefinite");
        root[k] = std::sqrt(std::max(0.0, es.values[k]));
    }
    CMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < n; ++k)
                s += es.vectors(i, k) * root[k] * std::conj(es.vectors(j, k));
            b(i, j) = s;
            b(j, i) = std::conj(s);
        }
    for (std::size_t i = 0; i < n; ++i)
        b(i, i) = b(i, i).real();
    return b;
}

double quadratic_form(const std::vector<cplx> &v, const CMatrix &a)
{
    if (!a.square() || a.rows() != v.size())
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    cplx s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        cplx row = 0.0;
        for (std::size_t j = 0; j < v.size(); ++j)
            row += a(i, j) * v[j];
        s += std::conj(v[i]) * row;
    }
    return s.real();
}

} // namespace fris
