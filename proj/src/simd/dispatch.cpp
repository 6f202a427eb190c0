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

#include "fris/simd/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace fris::simd {

namespace {
std::atomic<bool> g_force_scalar{false};
}

bool avx2_available()
{
#if (defined(__x86_64__) || defined(_M_X64)) && defined(__GNUC__)
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

void force_scalar(bool on)
{
    g_force_scalar.store(on);
}

const char *active_kernel()
{
    if (g_force_scalar.load())
        return "scalar";
#if defined(__aarch64__)
    return "neon";
#else
    return avx2_available() ? "avx2" : "scalar";
#endif
}

void cascade_gain_batch(const GainBatch &b)
{
    if (b.count % 4 != 0)
        throw std::invalid_argument("cascade_gain_batch: count must be a multiple of 4");
    if (!g_force_scalar.load()) {
#if defined(__aarch64__)
        cascade_gain_batch_neon(b);
        return;
#elif defined(__x86_64__) || defined(_M_X64)
        if (avx2_available()) {
            cascade_gain_batch_avx2(b);
            return;
        }
#endif
    }
    cascade_gain_batch_scalar(b);
}

} // namespace fris::simd
