// Copyright 2026 the ontocheck authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOCHECK_RNG_HPP
#define ONTOCHECK_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "ontocheck/qstate.hpp"

namespace ontocheck {

/// Seeded sampling helpers. Distributions are derived from the raw engine
/// words by fixed formulas (std:: distributions are implementation-defined),
/// so a seed pins the sample stream across toolchains.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform in [0, 1) with 53-bit resolution.
    double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t index(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    /// Area-uniform direction on the unit sphere.
    Bloch<FloatBackend> bloch_direction() {
        const double z = 1.0 - 2.0 * u01();
        const double phi = 2.0 * std::numbers::pi * u01();
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {s * std::cos(phi), s * std::sin(phi), z};
    }

    /// Haar-uniform qubit ray (via the area-uniform Bloch direction).
    Ray<FloatBackend> ray() { return bloch_to_ray(bloch_direction()); }

  private:
    std::mt19937_64 eng_;
};

}  // namespace ontocheck

#endif  // ONTOCHECK_RNG_HPP
