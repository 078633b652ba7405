// SPDX-License-Identifier: Apache-2.0
//
// ambc: optimum multi-antenna receiver library and Monte-Carlo simulator
// for binary-modulated ambient backscatter signals
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

#ifndef AMBC_RNG_HPP
#define AMBC_RNG_HPP

#include <cmath>
#include <cstdint>

#include "ambc/types.hpp"

namespace ambc
{
    // Counter-seeded xoshiro256++ stream. Every (seed, stream) pair yields an
    // independent, reproducible sequence, so Monte-Carlo workers can derive
    // per-trial generators without any shared mutable state. Stream-index
    // conventions used by the simulation harness:
    //   data trial t            -> stream t
    //   secondary batch trial t -> stream (1 << 62) | t
    //   preamble block b        -> stream (1 << 63) | b
    class Rng
    {
    public:
        explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
        {
            std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ull * (stream + 1));
            for (auto &word : state_)
                word = splitmix64(x);
        }

        std::uint64_t next_u64() noexcept
        {
            const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
            const std::uint64_t t = state_[1] << 17;
            state_[2] ^= state_[0];
            state_[3] ^= state_[1];
            state_[1] ^= state_[2];
            state_[0] ^= state_[3];
            state_[2] ^= t;
            state_[3] = rotl(state_[3], 45);
            return result;
        }

        // Uniform on [0, 1), 53-bit resolution.
        double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

        // Uniform integer in [0, n), Lemire multiply-shift (slight bias < 2^-32
        // is irrelevant for the tiny n used here).
        std::uint32_t bounded(std::uint32_t n) noexcept
        {
            return static_cast<std::uint32_t>((static_cast<std::uint64_t>(static_cast<std::uint32_t>(next_u64())) * n) >> 32);
        }

        // Standard real Gaussian, Box-Muller.
        double normal() noexcept
        {
            const double u = 1.0 - uniform(); // (0, 1]
            const double v = uniform();
            return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586476925286766559 * v);
        }

        // Circularly-symmetric complex Gaussian CN(0, 1): |z|^2 ~ Exp(1),
        // phase uniform; real and imaginary parts each N(0, 1/2).
        cplx complex_normal() noexcept
        {
            const double u = 1.0 - uniform();
            const double r = std::sqrt(-std::log(u));
            const double phi = 6.283185307179586476925286766559 * uniform();
            return {r * std::cos(phi), r * std::sin(phi)};
        }

    private:
        static std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

        static std::uint64_t splitmix64(std::uint64_t &x) noexcept
        {
            std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            return z ^ (z >> 31);
        }

        std::uint64_t state_[4];
    };
}

#endif
