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
#include <complex>
#include <numbers>

#include "moments.hpp"

namespace janus {

/// Second-moment summary in vacuum units ([Q,P] = i, vacuum variance 1/2).
struct CovarianceSummary {
    double VQQ = 0.5;
    double VPP = 0.5;
    /// Symmetrized covariance (1/2)<{dQ, dP}> = Im m.
    double VQP = 0.0;
    double Vmin = 0.5;
    double Vmax = 0.5;
    /// Minimizing homodyne phase in [0, pi).
    double phi_star = 0.0;
    /// False when m = 0: every phase gives the same variance and phi_star is
    /// reported as 0.
    bool phi_star_unique = false;
    /// Measured squeezing u = 2 Vmin (vacuum = 1).
    double u = 1.0;
    double S_dB = 0.0;

    [[nodiscard]] double determinant() const noexcept { return VQQ * VPP - VQP * VQP; }
};

[[nodiscard]] inline CovarianceSummary covariance(const MomentSet &ms) {
    CovarianceSummary cs;
    const double base = 0.5 + ms.nbar;
    const double mabs = std::abs(ms.m);
    cs.VQQ = base + ms.m.real();
    cs.VPP = base - ms.m.real();
    cs.VQP = ms.m.imag();
    cs.Vmin = base - mabs;
    cs.Vmax = base + mabs;
    if (mabs == 0.0) {
        cs.phi_star = 0.0;
        cs.phi_star_unique = false;
    } else {
        double phi = 0.5 * std::arg(ms.m) + 0.5 * std::numbers::pi;
        phi = std::fmod(phi, std::numbers::pi);
        if (phi < 0.0) {
            phi += std::numbers::pi;
        }
        cs.phi_star = phi;
        cs.phi_star_unique = true;
    }
    cs.u = 2.0 * cs.Vmin;
    cs.S_dB = -10.0 * std::log10(cs.u);
    return cs;
}

/// Var(X_phi) = 1/2 + nbar + Re(m e^{-2 i phi}), X_phi = (a e^{-i phi} + h.c.)/sqrt2.
[[nodiscard]] inline double rotated_variance(const MomentSet &ms, double phi) {
    return 0.5 + ms.nbar + std::real(ms.m * std::polar(1.0, -2.0 * phi));
}

/**
 * Moments of D(alpha0)|psi> for an even-parity |psi> (<a> = 0 and all odd
 * moments vanish). Raw moments shift; nbar and m are unchanged.
 */
[[nodiscard]] inline MomentSet displace(const MomentSet &ms, cplx alpha0) {
    if (std::abs(ms.mean_a) != 0.0) {
        throw DomainError("displace expects an undisplaced (even-parity) moment set");
    }
    const cplx a = alpha0;
    const cplx ac = std::conj(alpha0);
    const double a2 = std::norm(alpha0);
    MomentSet out = ms;
    out.mean_a = alpha0;
    out.N1 = ms.N1 + a2;
    // <(a^dag + a*)^2 (a + a)^2> with odd moments dropped.
    out.N2 = ms.N2 + a2 * a2 + 4.0 * a2 * ms.N1 + 2.0 * std::real(ac * ac * ms.M2);
    out.M2 = ms.M2 + a * a;
    out.M4 = ms.M4 + 6.0 * a * a * ms.M2 + a * a * a * a;
    // Central moments are displacement invariant.
    out.nbar = ms.nbar;
    out.m = ms.m;
    return out;
}

} // namespace janus
