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

#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace janus::special {

/// log(n!!) for n >= -1, with (-1)!! = 0!! = 1. Evaluated through lgamma so
/// that arguments in the hundreds stay finite.
[[nodiscard]] inline double log_double_factorial(int n) {
    if (n < -1) {
        throw DomainError("double factorial defined for n >= -1");
    }
    if (n <= 0) {
        return 0.0;
    }
    if (n % 2 == 0) {
        // (2k)!! = 2^k k!
        const int k = n / 2;
        return k * std::numbers::ln2 + std::lgamma(k + 1.0);
    }
    // (2k-1)!! = (2k)! / (2^k k!)
    const int k = (n + 1) / 2;
    return std::lgamma(2.0 * k + 1.0) - k * std::numbers::ln2 - std::lgamma(k + 1.0);
}

/// n!! as a double. Small arguments use the exact integer product.
[[nodiscard]] inline double double_factorial(int n) {
    if (n < -1) {
        throw DomainError("double factorial defined for n >= -1");
    }
    if (n <= 25) {
        double p = 1.0;
        for (int k = n; k > 1; k -= 2) {
            p *= k;
        }
        return p;
    }
    return std::exp(log_double_factorial(n));
}

} // namespace janus::special
