// gtapl - ground-to-air mmWave path-loss modelling library
// Copyright (C) 2026 gtapl developers
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

#ifndef GTA_RNG_HPP
#define GTA_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace gta
{

namespace detail
{
// splitmix64 finalizer (a 64-bit bijection)
inline std::uint64_t mix64(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
} // namespace detail

// Small deterministic generator (splitmix64). The entire library draws its
// randomness through this type, so results are reproducible from a seed alone
// independent of platform RNG facilities.
class SplitMix64
{
  public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next_u64() noexcept
    {
        return detail::mix64(state_ += 0x9E3779B97F4A7C15ull);
    }

    // Uniform in (0, 1]; never returns 0, so it is safe under log().
    double next_unit() noexcept
    {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    // Standard normal deviate via Box-Muller. Consumes exactly two uniforms
    // per draw, which keeps independently keyed substreams aligned.
    double next_normal() noexcept
    {
        const double u1 = next_unit();
        const double u2 = next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::uint64_t state_;
};

// Mixes (seed, a, b) into a substream key, e.g. one generator per
// (cell, trial) pair so that evaluation order cannot change results.
inline std::uint64_t substream_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b) noexcept
{
    std::uint64_t k = detail::mix64(seed ^ 0x9E3779B97F4A7C15ull);
    k = detail::mix64(k ^ a);
    k = detail::mix64(k ^ b);
    return k;
}

} // namespace gta

#endif
