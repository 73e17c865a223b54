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
 * Closed-form moments of Janus superpositions.
 *
 * Everything downstream (covariances, variances of quadratic generators,
 * Fisher information) is a function of the bundle {N1, N2, M2, M4} plus the
 * central moments {nbar, m}. For a pair of squeezed vacua the cross matrix
 * elements follow from the generating series
 *
 *   G_2k(z) = sum_m z^m (2m+2k-1)!!/(2m)!! = (2k-1)!! / (1-z)^{k+1/2},
 *
 * giving <zeta|a^{2k}|xi> = c (2k-1)!! (-alpha)^k / (1-z)^{k+1/2} with
 * c = (1-x)^{1/4}(1-y)^{1/4}, and <zeta|a^{dag k} a^k|xi> =
 * c P_k(z) / (1-z)^{k+1/2} with the squeezing polynomials P_1, P_2.
 */

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "core_state.hpp"
#include "errors.hpp"
#include "special.hpp"

namespace janus {

/// Moment bundle of a single-mode pure state. Raw moments N1 = <a^dag a>,
/// N2 = <a^dag2 a^2>, M2 = <a^2>, M4 = <a^4>; central moments
/// nbar = N1 - |<a>|^2 and m = M2 - <a>^2; mean_a = <a>.
struct MomentSet {
    double N1 = 0.0;
    double N2 = 0.0;
    cplx M2;
    cplx M4;
    double nbar = 0.0;
    cplx m;
    cplx mean_a;
};

/// Squeezing polynomials for the factorial moments, P_1(u) = u and
/// P_2(u) = 2u^2 + u. Higher orders are not provided.
struct SqueezePolynomial {
    int k = 1;

    explicit SqueezePolynomial(int order) : k(order) {
        if (order != 1 && order != 2) {
            throw DomainError("squeezing polynomials are provided for k = 1, 2 only");
        }
    }

    /// Coefficients of u^0 .. u^k.
    [[nodiscard]] std::array<double, 3> coefficients() const noexcept {
        if (k == 1) {
            return {0.0, 1.0, 0.0};
        }
        return {0.0, 1.0, 2.0};
    }

    template <class T> [[nodiscard]] T operator()(const T &u) const {
        if (k == 1) {
            return u;
        }
        return T(2.0) * u * u + u;
    }
};

/**
 * <zeta|a^{2k}|xi> = (1-x)^{1/4}(1-y)^{1/4} (2k-1)!! (-e^{i theta} tanh r)^k
 *                    / (1-z)^{k+1/2}.
 *
 * The swapped element <xi|a^{2k}|zeta> is cross_even_moment(zeta, xi, k).
 * Evaluated in log space so that large k neither overflows nor underflows
 * prematurely.
 */
[[nodiscard]] inline cplx cross_even_moment(const SqueezeParams &xi, const SqueezeParams &zeta,
                                            int k) {
    if (k < 0) {
        throw DomainError("cross_even_moment requires k >= 0");
    }
    const OverlapData ov = overlap_data(xi, zeta);
    if (k == 0) {
        return ov.S;
    }
    const double t = xi.tanh_r();
    if (t == 0.0) {
        return {0.0, 0.0};
    }
    const cplx log_minus_alpha(std::log(t), xi.theta() + std::numbers::pi);
    const cplx expo = std::log(ov.prefactor) + special::log_double_factorial(2 * k - 1) +
                      static_cast<double>(k) * log_minus_alpha -
                      (k + 0.5) * std::log(ov.one_minus_z);
    return std::exp(expo);
}

/// <zeta| a^{dag k} a^k |xi> = c P_k(z) / (1-z)^{k+1/2} for k = 1, 2.
[[nodiscard]] inline cplx cross_factorial_moment(const SqueezeParams &xi,
                                                 const SqueezeParams &zeta, int k) {
    const SqueezePolynomial P(k);
    const OverlapData ov = overlap_data(xi, zeta);
    return ov.prefactor * P(ov.z) / std::pow(ov.one_minus_z, k + 0.5);
}

/// Closed form G_2k(z) = (2k-1)!! / (1-z)^{k+1/2}; requires |z| < 1.
[[nodiscard]] inline cplx generating_series(cplx z, int k) {
    if (k < 0) {
        throw DomainError("generating_series requires k >= 0");
    }
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("generating series converges only for |z| < 1");
    }
    return special::double_factorial(2 * k - 1) / std::pow(1.0 - z, k + 0.5);
}

/// Partial sum of sum_m z^m (2m+2k-1)!!/(2m)!! over m < terms.
[[nodiscard]] inline cplx generating_series_partial(cplx z, int k, int terms) {
    if (k < 0 || terms < 0) {
        throw DomainError("generating_series_partial requires k, terms >= 0");
    }
    cplx term = special::double_factorial(2 * k - 1);
    cplx sum = 0.0;
    for (int m = 0; m < terms; ++m) {
        sum += term;
        term *= z * static_cast<double>(2 * m + 2 * k + 1) / static_cast<double>(2 * m + 2);
    }
    return sum;
}

/// Moments of one squeezed vacuum: N1 = sinh^2 r, N2 = N1 (3 N1 + 1),
/// M2 = -sinh r cosh r e^{i theta}, M4 = 3 M2^2.
[[nodiscard]] inline MomentSet diagonal_moments(const SqueezeParams &p) {
    MomentSet ms;
    const double n = p.mean_photons();
    ms.N1 = n;
    ms.N2 = n * (3.0 * n + 1.0);
    ms.M2 = -std::polar(p.sinh_r() * p.cosh_r(), p.theta());
    ms.M4 = 3.0 * ms.M2 * ms.M2;
    ms.nbar = ms.N1;
    ms.m = ms.M2;
    return ms;
}

/// Full moment bundle of a normalized Janus state. The state has even
/// parity, so <a> = 0, nbar = N1 and m = M2.
[[nodiscard]] inline MomentSet moment_set(const JanusState &state) {
    const SqueezeParams &xi = state.xi();
    const SqueezeParams &zeta = state.zeta();
    const cplx chi = state.chi();
    const cplx eta = state.eta();
    const double wx = std::norm(chi);
    const double wz = std::norm(eta);
    const cplx ce = chi * std::conj(eta);

    const MomentSet dx = diagonal_moments(xi);
    const MomentSet dz = diagonal_moments(zeta);

    MomentSet ms;
    ms.N1 = wx * dx.N1 + wz * dz.N1 + 2.0 * std::real(ce * cross_factorial_moment(xi, zeta, 1));
    ms.N2 = wx * dx.N2 + wz * dz.N2 + 2.0 * std::real(ce * cross_factorial_moment(xi, zeta, 2));
    ms.M2 = wx * dx.M2 + wz * dz.M2 + ce * cross_even_moment(xi, zeta, 1) +
            std::conj(ce) * cross_even_moment(zeta, xi, 1);
    ms.M4 = wx * dx.M4 + wz * dz.M4 + ce * cross_even_moment(xi, zeta, 2) +
            std::conj(ce) * cross_even_moment(zeta, xi, 2);
    ms.nbar = ms.N1;
    ms.m = ms.M2;
    return ms;
}

inline constexpr double kG2Floor = 1e-12;

/// g2(0) = N2 / N1^2, or std::nullopt when N1 is below the floor (the ratio
/// is then dominated by the vanishing denominator).
[[nodiscard]] inline std::optional<double> g2(const MomentSet &ms, double floor = kG2Floor) {
    if (!(ms.N1 > floor)) {
        return std::nullopt;
    }
    return ms.N2 / (ms.N1 * ms.N1);
}

} // namespace janus
