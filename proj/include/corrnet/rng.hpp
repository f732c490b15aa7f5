/*
 * Copyright 2026 The corrnet Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

     http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.

*/

#pragma once

#include <cstdint>
#include <random>

namespace corrnet {

using Engine = std::mt19937_64;

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives a child seed from a parent seed and a stream label.
///
/// For a fixed parent the map label -> child is injective, so distinct
/// labels never share a stream.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t label) noexcept
{
    return mix64(parent + mix64(label));
}

/// Seed of replication `replication` at sweep point `point`. Injective in
/// (point, replication) for indices below 2^32.
constexpr std::uint64_t replication_seed(std::uint64_t master, std::uint32_t point,
                                         std::uint32_t replication) noexcept
{
    const std::uint64_t key = (static_cast<std::uint64_t>(point) << 32) | replication;
    return derive_seed(master, key);
}

// Stream labels used inside one realization.
inline constexpr std::uint64_t kGeometryStream = 0;
inline constexpr std::uint64_t kFadingStream = 1;

inline Engine make_engine(std::uint64_t seed) { return Engine{seed}; }

}  // namespace corrnet
