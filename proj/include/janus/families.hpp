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

/**
 * @file
 * Named one- and two-parameter Janus families used throughout the analysis.
 */

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "core_state.hpp"
#include "errors.hpp"

namespace janus {

/// Squeeze magnitude with tanh^2 r = x.
[[nodiscard]] inline double r_from_x(double x) {
    if (!(x >= 0.0) || !(x < 1.0)) {
        throw DomainError("x = tanh^2 r must lie in [0, 1)");
    }
    return std::atanh(std::sqrt(x));
}

/**
 * Equal-strength pair with eta/chi = -e^{i Delta}. The two-photon amplitudes
 * of the constituents cancel, so the state has no |2> component.
 */
[[nodiscard]] inline JanusState two_photon_cancelling(double r, double theta, double phi) {
    const SqueezeParams xi(r, theta);
    const SqueezeParams zeta(r, phi);
    return from_ratio(xi, zeta, -std::polar(1.0, theta - phi));
}

/// theta = 0, phi = pi, chi = eta real: the normalized sum |xi> + |-xi>.
[[nodiscard]] inline JanusState pi_phase_equal_weight(double x) {
    if (!(x > 0.0)) {
        throw DomainError("pi-phase family requires x > 0");
    }
    return two_photon_cancelling(r_from_x(x), 0.0, std::numbers::pi);
}

} // namespace janus
