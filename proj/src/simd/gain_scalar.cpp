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

// Reference kernel. Built with -ffp-contract=off; the vector kernels repeat
// this exact operation order lane by lane.

#include "fris/simd/kernels.hpp"

namespace fris::simd {

void cascade_gain_batch_scalar(const GainBatch &b)
{
    const std::size_t n = b.n;
    for (std::size_t t = 0; t < b.count; ++t) {
        double zre = 0.0, zim = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            double yre = 0.0, yim = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                const double are = b.a_re[r * n + c], aim = b.a_im[r * n + c];
                const double fre = b.gf_re[c * b.count + t], fim = b.gf_im[c * b.count + t];
                yre = yre + are * fre;
                yre = yre - aim * fim;
                yim = yim + are * fim;
                yim = yim + aim * fre;
            }
            const double ure = b.gu_re[r * b.count + t], uim = b.gu_im[r * b.count + t];
            zre = zre + ure * yre;
            zre = zre + uim * yim;
            zim = zim + ure * yim;
            zim = zim - uim * yre;
        }
        b.out[t] = zre * zre + zim * zim;
    }
}

} // namespace fris::simd
