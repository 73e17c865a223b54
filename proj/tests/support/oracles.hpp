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

// Independent reference computations for the test suites. Nothing here calls
// the closed forms under test.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "janus/core_state.hpp"
#include "janus/fock_oracle.hpp"
#include "janus/moments.hpp"

namespace janus::testing {

/// <zeta|xi> by plain recurrence on the Fock amplitudes in double precision.
inline cplx series_overlap(const SqueezeParams &xi, const SqueezeParams &zeta, int terms) {
    cplx a = 1.0 / std::sqrt(xi.cosh_r());
    cplx b = 1.0 / std::sqrt(zeta.cosh_r());
    cplx sum = std::conj(b) * a;
    for (int n = 1; n < terms; ++n) {
        const double f = std::sqrt((2.0 * n - 1.0) / (2.0 * n));
        a *= -xi.alpha() * f;
        b *= -zeta.alpha() * f;
        sum += std::conj(b) * a;
    }
    return sum;
}

/// Minimum of the Rayleigh quotient c^dag M c / c^dag G c over a dense grid of
/// c = (cos a, sin a e^{ib}).
struct GridMinimum {
    double value = 0.0;
    double a = 0.0;
    double b = 0.0;
};

inline GridMinimum rayleigh_grid_minimum(double A, double B, cplx C, cplx S, int na, int nb) {
    GridMinimum best{1e300, 0.0, 0.0};
    for (int i = 0; i < na; ++i) {
        const double a = std::numbers::pi * i / na;
        const double ca = std::cos(a);
        const double sa = std::sin(a);
        for (int j = 0; j < nb; ++j) {
            const double b = 2.0 * std::numbers::pi * j / nb;
            const cplx e = std::polar(sa, b);
            // c = (ca, e); c^dag M c with M = [[A, C*], [C, B]]
            const double num = A * ca * ca + B * std::norm(e) + 2.0 * std::real(std::conj(e) * C * ca);
            const double den = ca * ca + std::norm(e) + 2.0 * std::real(std::conj(e) * S * ca);
            const double q = num / den;
            if (q < best.value) {
                best = {q, a, b};
            }
        }
    }
    return best;
}

/// Least-squares fit of y ~ sum_k c_k x^{p_k}; returns the largest absolute
/// residual after the fit.
inline double fit_residual(const std::vector<double> &xs, const std::vector<double> &ys,
                           const std::vector<int> &powers) {
    const std::size_t m = powers.size();
    std::vector<std::vector<double>> nrm(m, std::vector<double>(m + 1, 0.0));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t r = 0; r < m; ++r) {
            const double br = std::pow(xs[i], powers[r]);
            for (std::size_t c = 0; c < m; ++c) {
                nrm[r][c] += br * std::pow(xs[i], powers[c]);
            }
            nrm[r][m] += br * ys[i];
        }
    }
    // Gaussian elimination with partial pivoting.
    for (std::size_t c = 0; c < m; ++c) {
        std::size_t piv = c;
        for (std::size_t r = c + 1; r < m; ++r) {
            if (std::abs(nrm[r][c]) > std::abs(nrm[piv][c])) {
                piv = r;
            }
        }
        std::swap(nrm[c], nrm[piv]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r != c) {
                const double f = nrm[r][c] / nrm[c][c];
                for (std::size_t k = c; k <= m; ++k) {
                    nrm[r][k] -= f * nrm[c][k];
                }
            }
        }
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double fit = 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            fit += nrm[r][m] / nrm[r][r] * std::pow(xs[i], powers[r]);
        }
        worst = std::max(worst, std::abs(ys[i] - fit));
    }
    return worst;
}

inline bool close_rel(double got, double want, double rel, double abs = 0.0) {
    return std::abs(got - want) <= std::max(rel * std::abs(want), abs);
}

inline bool close_rel(cplx got, cplx want, double rel, double abs = 0.0) {
    return std::abs(got - want) <= std::max(rel * std::abs(want), abs);
}

} // namespace janus::testing
