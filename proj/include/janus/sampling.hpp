// Copyright 2026 The Janus Metrology Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numbers>
#include <random>

#include "core_state.hpp"
#include "errors.hpp"

namespace janus {

/// Portable uniform sampler: identical streams on every standard library,
/// unlike std::uniform_real_distribution.
class Sampler {
  public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    /// Uniform on [0, 1).
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

    double phase() { return uniform(0.0, 2.0 * std::numbers::pi); }

  private:
    std::mt19937_64 gen_;
};

struct RandomStateOptions {
    double r_max = 2.0;
    double t_min = -3.0;
    double t_max = 3.0;
};

/// r, s uniform on [0, r_max], phases uniform on [0, 2 pi), real ratio t
/// uniform on [t_min, t_max] through from_ratio. Draws that annihilate the
/// span are redrawn.
[[nodiscard]] inline JanusState random_janus(Sampler &rng, const RandomStateOptions &opt = {}) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const SqueezeParams xi(rng.uniform(0.0, opt.r_max), rng.phase());
        const SqueezeParams zeta(rng.uniform(0.0, opt.r_max), rng.phase());
        const double t = rng.uniform(opt.t_min, opt.t_max);
        try {
            return from_ratio(xi, zeta, t);
        } catch (const DegenerateSpanError &) {
        }
    }
    throw Error("could not draw a nondegenerate random state");
}

} // namespace janus
