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

#include <cstddef>

namespace fris::simd {

// Structure-of-arrays batch for the bilinear gain |g_u^H A g_f|^2.
// A is n x n row-major (split re/im). g_f and g_u are laid out
// [element][trial] with row stride `count`; count must be a multiple of 4.
struct GainBatch {
    std::size_t n = 0;
    std::size_t count = 0;
    const double *a_re = nullptr;
    const double *a_im = nullptr;
    const double *gf_re = nullptr;
    const double *gf_im = nullptr;
    const double *gu_re = nullptr;
    const double *gu_im = nullptr;
    double *out = nullptr; // count gains
};

void cascade_gain_batch_scalar(const GainBatch &b);
#if defined(__x86_64__) || defined(_M_X64)
void cascade_gain_batch_avx2(const GainBatch &b);
#endif
#if defined(__aarch64__)
void cascade_gain_batch_neon(const GainBatch &b);
#endif

// Runtime-dispatched entry point.
void cascade_gain_batch(const GainBatch &b);

// "avx2", "neon" or "scalar".
const char *active_kernel();
bool avx2_available();

// Pins dispatch to the scalar reference (tests, reproducibility checks).
void force_scalar(bool on);

} // namespace fris::simd
