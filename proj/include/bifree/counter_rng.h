// Copyright 2026 The bifree Authors
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

#ifndef BIFREE_COUNTER_RNG_H
#define BIFREE_COUNTER_RNG_H

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace bifree {

/// Stateless counter-based generator: every draw is a hash of its key
/// (seed, trial, matrix, entry, lane), so any draw can be regenerated in
/// isolation and the result does not depend on evaluation order.
class CounterRng {
   public:
    CounterRng(std::uint64_t seed, std::uint64_t trial) : seed_(seed), trial_(trial) {
    }

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t bits(std::uint64_t matrix, std::uint64_t entry, std::uint64_t lane) const {
        std::uint64_t h = mix(seed_);
        h = mix(h ^ trial_);
        h = mix(h ^ matrix);
        h = mix(h ^ entry);
        return mix(h ^ lane);
    }

    /// Uniform on (0, 1).
    double uniform(std::uint64_t matrix, std::uint64_t entry, std::uint64_t lane) const {
        return (static_cast<double>(bits(matrix, entry, lane) >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Two independent standard normals (Box-Muller).
    std::pair<double, double> normal_pair(std::uint64_t matrix, std::uint64_t entry) const {
        double u1 = uniform(matrix, entry, 0);
        double u2 = uniform(matrix, entry, 1);
        double r = std::sqrt(-2.0 * std::log(u1));
        double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

   private:
    std::uint64_t seed_;
    std::uint64_t trial_;
};

}  // namespace bifree

#endif
