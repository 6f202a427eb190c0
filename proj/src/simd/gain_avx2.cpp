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

// AVX2 kernel, 4 trials per register. Compiled with -mavx2 only and
// -ffp-contract=off so the rounding sequence matches the scalar reference.

#include "fris/simd/kernels.hpp"

#include <immintrin.h>

namespace fris::simd {

void cascade_gain_batch_avx2(const GainBatch &b)
{
    const std::size_t n = b.n;
    for (std::size_t t = 0; t < b.count; t += 4) {
        __m256d zre = _mm256_setzero_pd(), zim = _mm256_setzero_pd();
        for (std::size_t r = 0; r < n; ++r) {
            __m256d yre = _mm256_setzero_pd(), yim = _mm256_setzero_pd();
            for (std::size_t c = 0; c < n; ++c) {
                const __m256d are = _mm256_set1_pd(b.a_re[r * n + c]);
                const __m256d aim = _mm256_set1_pd(b.a_im[r * n + c]);
                const __m256d fre = _mm256_loadu_pd(b.gf_re + c * b.count + t);
                const __m256d fim = _mm256_loadu_pd(b.gf_im + c * b.count + t);
                yre = _mm256_add_pd(yre, _mm256_mul_pd(are, fre));
                yre = _mm256_sub_pd(yre, _mm256_mul_pd(aim, fim));
                yim = _mm256_add_pd(yim, _mm256_mul_pd(are, fim));
                yim = _mm256_add_pd(yim, _mm256_mul_pd(aim, fre));
            }
            const __m256d ure = _mm256_loadu_pd(b.gu_re + r * b.count + t);
            const __m256d uim = _mm256_loadu_pd(b.gu_im + r * b.count + t);
            zre = _mm256_add_pd(zre, _mm256_mul_pd(ure, yre));
            zre = _mm256_add_pd(zre, _mm256_mul_pd(uim, yim));
            zim = _mm256_add_pd(zim, _mm256_mul_pd(ure, yim));
            zim = _mm256_sub_pd(zim, _mm256_mul_pd(uim, yre));
        }
        _mm256_storeu_pd(b.out + t, _mm256_add_pd(_mm256_mul_pd(zre, zre), _mm256_mul_pd(zim, zim)));
    }
}

} // namespace fris::simd
