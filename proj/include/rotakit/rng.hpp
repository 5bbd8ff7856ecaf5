// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace rotakit {

// splitmix64 step; advances the state and returns the next output.
// Used everywhere randomness is needed so results do not depend on the
// standard library's distribution implementations.
inline std::uint64_t splitmix64(std::uint64_t& state)
{
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Decorrelated sub-seed for item `index` of a stream, so per-item work can
// be reproduced without replaying the whole stream.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
    return splitmix64(s);
}

// Uniform double in [0, 1) from the top 53 bits of one splitmix64 output.
inline double uniform01(std::uint64_t& state)
{
    return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
}

}  // namespace rotakit
