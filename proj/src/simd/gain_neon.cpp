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

// NEON kernel, 2 trials per register.

#include "fris/simd/kernels.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>

namespace fris::simd {

void cascade_gain_batch_neon(const GainBatch &b)
{
    const std::size_t n = b.n;
    for (std::size_t t = 0; t < b.count; t += 2) {
        float64x2_t zre = vdupq_n_f64(0.0), zim = vdupq_n_f64(0.0);
        for (std::size_t r = 0; r < n; ++r) {
            float64x2_t yre = vdupq_n_f64(0.0), yim = vdupq_n_f64(0.0);
            for (std::size_t c = 0; c < n; ++c) {
                const float64x2_t are = vdupq_n_f64(b.a_re[r * n + c]);
                const float64x2_t aim = vdupq_n_f64(b.a_im[r * n + c]);
                const float64x2_t fre = vld1q_f64(b.gf_re + c * b.count + t);
                const float64x2_t fim = vld1q_f64(b.gf_im + c * b.count + t);
                // separate mul/add: vfmaq would change the rounding
                yre = vaddq_f64(yre, vmulq_f64(are, fre));
                yre = vsubq_f64(yre, vmulq_f64(aim, fim));
                yim = vaddq_f64(yim, vmulq_f64(are, fim));
                yim = vaddq_f64(yim, vmulq_f64(aim, fre));
            }
            const float64x2_t ure = vld1q_f64(b.gu_re + r * b.count + t);
            const float64x2_t uim = vld1q_f64(b.gu_im + r * b.count + t);
            zre = vaddq_f64(zre, vmulq_f64(ure, yre));
            zre = vaddq_f64(zre, vmulq_f64(uim, yim));
            zim = vaddq_f64(zim, vmulq_f64(ure, yim));
            zim = vsubq_f64(zim, vmulq_f64(uim, yre));
        }
        vst1q_f64(b.out + t, vaddq_f64(vmulq_f64(zre, zre), vmulq_f64(zim, zim)));
    }
}

} // namespace fris::simd
#endif
