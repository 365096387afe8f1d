// Copyright 2026 The Unsharp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNSHARP_RNG_H
#define UNSHARP_RNG_H

#include <cstdint>
#include <random>

namespace unsharp {

/// SplitMix64 finalizer. Used for seed derivation only.
uint64_t splitmix64(uint64_t x);

/// Seed of one trajectory as a pure function of its coordinates:
///   splitmix64(splitmix64(splitmix64(master) ^ stream) ^ trajectory)
/// Grid points of one sweep share `stream`, so every grid point sees the same
/// per-trajectory seeds.
uint64_t derive_seed(uint64_t master_seed, uint64_t stream, uint64_t trajectory);

/// Explicit random source threaded through every stochastic operation.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// does its own real-number conversions, so draws are identical across
/// standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (one value per call; the partner is cached).
    double normal();

    uint64_t next_u64() {
        return engine_();
    }

   private:
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

}  // namespace unsharp

#endif
