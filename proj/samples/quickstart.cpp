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

// Builds a two-component superposition, prints its moments and benchmarks,
// then optimizes the Q variance over the span of the two constituents.

#include <cstdio>
#include <numbers>

#include "janus/janus.hpp"

int main() {
    using namespace janus;
    const double r = r_from_x(0.5);
    const JanusState psi = from_ratio(SqueezeParams(r, 0.0), SqueezeParams(r, std::numbers::pi), -0.32 / 1.15);
    const QfiReport rep = benchmarks(moment_set(psi));
    std::printf("nbar=%.6f  F_phase=%.6f  F_quad_env=%.6f  u=%.6f\n", rep.nbar, rep.F_phase,
                rep.F_quad_env, rep.u);

    const SpanOptimum opt = span_minimum(SqueezeParams(1.0, 0.0), SqueezeParams(0.9, 0.0), Axis::Q);
    std::printf("span minimum (Delta Q)^2=%.10f  eta/chi=%.6f\n", opt.lambda_minus, opt.ratio.real());
    return 0;
}
