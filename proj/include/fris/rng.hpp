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
#include <cmath>
#include <cstdint>
#include <numbers>

namespace fris {

// Philox4x64-10 counter-based generator (Salmon et al., SC'11). Stateless:
// every output block is a pure function of (counter, key).
struct Philox4x64 {
    using block = std::array<std::uint64_t, 4>;
    using key_type = std::array<std::uint64_t, 2>;

    static block generate(block ctr, key_type key)
    {
        constexpr std::uint64_t M0 = 0xD2E7470EE14C6C93ULL, M1 = 0xCA5A826395121157ULL;
        constexpr std::uint64_t W0 = 0x9E3779B97F4A7C15ULL, W1 = 0xBB67AE8584CAA73BULL;
        for (int r = 0; r < 10; ++r) {
            const unsigned __int128 p0 = static_cast<unsigned __int128>(M0) * ctr[0];
            const unsigned __int128 p1 = static_cast<unsigned __int128>(M1) * ctr[2];
            const auto hi0 = static_cast<std::uint64_t>(p0 >> 64), lo0 = static_cast<std::uint64_t>(p0);
            const auto hi1 = static_cast<std::uint64_t>(p1 >> 64), lo1 = static_cast<std::uint64_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += W0;
            key[1] += W1;
        }
        return ctr;
    }
};

// 53-bit uniform in (0, 1).
inline double to_unit_open(std::uint64_t u)
{
    // 52-bit grid so the largest value stays strictly below one
    return (static_cast<double>(u >> 12) + 0.5) * 0x1.0p-52;
}

// Stream of doubles for a fixed (seed, stream id, trial). Each call to
// next_block consumes one counter value.
class CounterStream
{
  public:
    CounterStream(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial)
        : key_{seed, stream}, trial_(trial)
    {
    }

    double uniform()
    {
        if (pos_ == 4)
            refill();
        return to_unit_open(buf_[pos_++]);
    }

    // Standard circularly-symmetric complex normal, E|z|^2 = 1.
    void complex_normal(double &re, double &im)
    {
        const double u1 = uniform(), u2 = uniform();
        const double r = std::sqrt(-std::log(u1)); // sqrt(-2 ln u) * sqrt(1/2)
        const double t = 2.0 * std::numbers::pi * u2;
        re = r * std::cos(t);
        im = r * std::sin(t);
    }

  private:
    void refill()
    {
        buf_ = Philox4x64::generate({trial_, block_++, 0, 0}, key_);
        pos_ = 0;
    }

    Philox4x64::key_type key_;
    std::uint64_t trial_;
    std::uint64_t block_ = 0;
    Philox4x64::block buf_{};
    int pos_ = 4;
};

// Stream ids used across the library.
enum : std::uint64_t { kStreamPhases = 1, kStreamChannel = 2 };

} // namespace fris
