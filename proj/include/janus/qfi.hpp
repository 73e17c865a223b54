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
 * Quantum Fisher information of pure Janus states.
 *
 * Phase encoding uses the generator a^dag a, giving F = 4(N2 + N1 - N1^2).
 * Quadratic encodings use
 *
 *   G_r     = (i/2)(e^{-i v} a^2 - e^{i v} a^{dag 2}),
 *   G_theta = (1/2)(e^{-i v} a^2 + e^{i v} a^{dag 2}),
 *
 * and, with [a^2, a^{dag 2}] = 4 a^dag a + 2,
 *
 *   F_theta / F_r = +- 2 Re(e^{-2iv}(M4 - M2^2)) + 2(N2 + 2 N1 + 1 - |M2|^2).
 *
 * Raw moments are used, so the quadratic formulas assume <a> = 0.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <utility>

#include "core_state.hpp"
#include "errors.hpp"
#include "moments.hpp"
#include "quadrature.hpp"

namespace janus {

inline constexpr double kBenchmarkRelTol = 1e-9;

/// a > b by more than the relative benchmark tolerance.
[[nodiscard]] inline bool strictly_exceeds(double a, double b, double rel = kBenchmarkRelTol) {
    return a - b > rel * std::max(std::abs(a), std::abs(b));
}

[[nodiscard]] inline double phase_qfi(const MomentSet &ms) {
    return 4.0 * (ms.N2 + ms.N1 - ms.N1 * ms.N1);
}

/// Phase QFI written through g2: 4(g2 nbar^2 + nbar - nbar^2).
[[nodiscard]] inline double phase_qfi_from_g2(double g2_value, double nbar) {
    return 4.0 * (g2_value * nbar * nbar + nbar - nbar * nbar);
}

/// 2(N2 + 2 N1 + 1 - |M2|^2), the axis-independent part of both quadratic QFIs.
[[nodiscard]] inline double quadratic_qfi_isotropic(const MomentSet &ms) {
    return 2.0 * (ms.N2 + 2.0 * ms.N1 + 1.0 - std::norm(ms.M2));
}

/// (F_theta, F_r) at generator axis vartheta.
[[nodiscard]] inline std::pair<double, double> quadratic_qfi(const MomentSet &ms,
                                                             double vartheta) {
    const double iso = quadratic_qfi_isotropic(ms);
    const double aniso = 2.0 * std::real(std::polar(1.0, -2.0 * vartheta) * (ms.M4 - ms.M2 * ms.M2));
    return {iso + aniso, iso - aniso};
}

[[nodiscard]] inline double quadratic_qfi_envelope(const MomentSet &ms) {
    return quadratic_qfi_isotropic(ms) + 2.0 * std::abs(ms.M4 - ms.M2 * ms.M2);
}

/// Axis vartheta* = arg(M4 - M2^2)/2 at which F_theta reaches the envelope;
/// 0 when M4 = M2^2 and every axis is equivalent.
[[nodiscard]] inline double optimal_generator_axis(const MomentSet &ms) {
    const cplx d = ms.M4 - ms.M2 * ms.M2;
    if (std::abs(d) == 0.0) {
        return 0.0;
    }
    return 0.5 * std::arg(d);
}

/// Squeezed-vacuum phase QFI at fixed mean photon number, 8 nbar (nbar + 1).
[[nodiscard]] inline double squeezed_phase_qfi_at_nbar(double nbar) {
    return 8.0 * nbar * (nbar + 1.0);
}

/// Squeezed-vacuum phase QFI at fixed measured squeezing, (u - 1/u)^2 / 2.
[[nodiscard]] inline double squeezed_phase_qfi_at_u(double u) {
    const double d = u - 1.0 / u;
    return 0.5 * d * d;
}

/// Squeezed-vacuum quadratic QFI envelope at fixed measured squeezing,
/// 1 + (u^2 + 1/u^2)/2.
[[nodiscard]] inline double squeezed_quadratic_qfi_at_u(double u) {
    return 1.0 + 0.5 * (u * u + 1.0 / (u * u));
}

/// Smallest principal variance at fixed mean photon number,
/// 1/2 + nbar - sqrt(nbar (nbar + 1)), evaluated without cancellation.
[[nodiscard]] inline double no_go_bound(double nbar) {
    if (!(nbar >= 0.0) || !std::isfinite(nbar)) {
        throw DomainError("no_go_bound requires a finite nbar >= 0");
    }
    return 0.25 / ((nbar + 0.5) + std::sqrt(nbar * (nbar + 1.0)));
}

struct AdvantageFlags {
    /// F_phase beats the squeezed vacuum with the same nbar.
    bool phase_fixed_nbar = false;
    /// g2 > 3 + 1/nbar, the equivalent moment criterion.
    bool g2_criterion = false;
    /// F_phase beats the squeezed vacuum with the same u.
    bool phase_fixed_u = false;
    /// Envelope beats the squeezed vacuum with the same u (false when masked).
    bool quad_fixed_u = false;
};

struct QfiReport {
    MomentSet moments;
    double F_phase = 0.0;
    double F_quad_iso = 2.0;
    double F_quad_env = 2.0;
    double vartheta_star = 0.0;
    bool vartheta_star_unique = false;
    double u = 1.0;
    double S_dB = 0.0;
    double nbar = 0.0;
    std::optional<double> g2;
    double F_phase_sq_at_nbar = 0.0;
    double F_phase_sq_at_u = 0.0;
    /// Empty when u > 1 (not squeezed).
    std::optional<double> F_quad_sq_at_u;
    /// u > 1: the fixed-u phase benchmark is evaluated but lies outside the
    /// squeezing regime.
    bool outside_squeezing = false;
    AdvantageFlags flags;

    [[nodiscard]] double F_quad_theta(double vartheta) const {
        return quadratic_qfi(moments, vartheta).first;
    }
    [[nodiscard]] double F_quad_r(double vartheta) const {
        return quadratic_qfi(moments, vartheta).second;
    }
    /// Envelope over the fixed-u quadratic benchmark, when defined.
    [[nodiscard]] std::optional<double> quad_ratio() const {
        if (!F_quad_sq_at_u) {
            return std::nullopt;
        }
        return F_quad_env / *F_quad_sq_at_u;
    }
};

[[nodiscard]] inline QfiReport benchmarks(const MomentSet &ms) {
    QfiReport rep;
    rep.moments = ms;
    const CovarianceSummary cs = covariance(ms);
    rep.u = cs.u;
    rep.S_dB = cs.S_dB;
    rep.nbar = ms.nbar;
    rep.g2 = g2(ms);
    rep.F_phase = phase_qfi(ms);
    rep.F_quad_iso = quadratic_qfi_isotropic(ms);
    rep.F_quad_env = quadratic_qfi_envelope(ms);
    rep.vartheta_star = optimal_generator_axis(ms);
    rep.vartheta_star_unique = std::abs(ms.M4 - ms.M2 * ms.M2) != 0.0;

    rep.F_phase_sq_at_nbar = squeezed_phase_qfi_at_nbar(ms.nbar);
    rep.F_phase_sq_at_u = squeezed_phase_qfi_at_u(rep.u);
    rep.outside_squeezing = rep.u > 1.0;
    if (!rep.outside_squeezing) {
        rep.F_quad_sq_at_u = squeezed_quadratic_qfi_at_u(rep.u);
    }

    rep.flags.phase_fixed_nbar = strictly_exceeds(rep.F_phase, rep.F_phase_sq_at_nbar);
    if (rep.g2) {
        rep.flags.g2_criterion = strictly_exceeds(*rep.g2, 3.0 + 1.0 / ms.nbar);
    }
    rep.flags.phase_fixed_u = strictly_exceeds(rep.F_phase, rep.F_phase_sq_at_u);
    if (rep.F_quad_sq_at_u) {
        rep.flags.quad_fixed_u = strictly_exceeds(rep.F_quad_env, *rep.F_quad_sq_at_u);
    }
    return rep;
}

/// One point of the real family (|0> + t|s>)/sqrt(N(t)).
struct AuxFamilyPoint {
    double s = 0.0;
    double t = 0.0;
    /// <s|0> = 1/sqrt(cosh s)
    double kappa = 1.0;
    /// N(t) = 1 + t^2 + 2 kappa t
    double Norm = 1.0;
    /// Weight t^2/N(t) of the squeezed constituent in the photon statistics.
    double Lambda = 0.0;
    double DQ2 = 0.5;
    double F_phase = 0.0;
    /// e^{-2s}/2, the squeezed constituent's own Q variance.
    double DQ2_constituent = 0.5;
    /// 8 n_s (n_s + 1), the squeezed constituent's own phase QFI.
    double F_phase_constituent = 0.0;
    /// t < -(1 + e^{2s})/(2 kappa), sufficient for DQ2 below the constituent.
    double dq_threshold = 0.0;
    bool dq_sufficient = false;
    bool beats_dq = false;
    bool beats_phase = false;
};

[[nodiscard]] inline AuxFamilyPoint auxiliary_family(double s, double t) {
    if (!(s > 0.0) || !std::isfinite(s) || !std::isfinite(t)) {
        throw DomainError("auxiliary family requires finite s > 0 and finite t");
    }
    AuxFamilyPoint p;
    p.s = s;
    p.t = t;
    p.kappa = 1.0 / std::sqrt(std::cosh(s));
    p.Norm = 1.0 + t * t + 2.0 * p.kappa * t;
    p.Lambda = t * t / p.Norm;
    const double e2s = std::exp(2.0 * s);
    p.DQ2_constituent = 0.5 / e2s;
    // <0|Q^2|s> = kappa (1 - tanh s) / 2 = kappa / (1 + e^{2s})
    p.DQ2 = (0.5 + t * t * p.DQ2_constituent + 2.0 * t * p.kappa / (1.0 + e2s)) / p.Norm;
    const double sh = std::sinh(s);
    const double ns = sh * sh;
    const double mu2 = 3.0 * ns * ns + 2.0 * ns;
    p.F_phase = 4.0 * (p.Lambda * mu2 - p.Lambda * p.Lambda * ns * ns);
    p.F_phase_constituent = squeezed_phase_qfi_at_nbar(ns);
    p.dq_threshold = -(1.0 + e2s) / (2.0 * p.kappa);
    p.dq_sufficient = t < p.dq_threshold;
    p.beats_dq = p.DQ2 < p.DQ2_constituent;
    p.beats_phase = strictly_exceeds(p.F_phase, p.F_phase_constituent);
    return p;
}

/// Contiguous run of scan points where both constituent benchmarks are beaten.
struct AuxInterval {
    double t_lo = 0.0;
    double t_hi = 0.0;
    int points = 0;
};

/// Uniform scan of t over [t_min, t_max]; returns the longest run in which
/// beats_dq and beats_phase both hold.
[[nodiscard]] inline std::optional<AuxInterval>
auxiliary_overlap_interval(double s, double t_min, double t_max, int points) {
    if (points < 2 || !(t_max > t_min)) {
        throw DomainError("overlap scan needs at least two points on a nonempty range");
    }
    std::optional<AuxInterval> best;
    AuxInterval run;
    for (int i = 0; i < points; ++i) {
        const double t = t_min + (t_max - t_min) * i / (points - 1);
        const AuxFamilyPoint p = auxiliary_family(s, t);
        if (p.beats_dq && p.beats_phase) {
            if (run.points == 0) {
                run.t_lo = t;
            }
            run.t_hi = t;
            ++run.points;
            if (!best || run.points > best->points) {
                best = run;
            }
        } else {
            run = AuxInterval{};
        }
    }
    return best;
}

/// Normalized vacuum-squeezed family chi|0> + |eta| e^{i delta}|s>, together
/// with its closed-form photon statistics.
struct ExactFamilyResult {
    JanusState state = JanusState::vacuum();
    double chi_closed = 1.0;
    double nbar_closed = 0.0;
    double g2_closed = 0.0;
    /// g2 - (3 + 1/nbar) = 3 (1/|eta|^2 - 1)
    double g2_gap_closed = 0.0;
    double F_phase_closed = 0.0;
    /// F_phase - 8 nbar (nbar + 1) = 12 nbar^2 (1/|eta|^2 - 1)
    double F_gap_closed = 0.0;
    /// Report built from the general moment path.
    QfiReport report;
};

[[nodiscard]] inline ExactFamilyResult exact_family(double eta_mag, double delta, double s) {
    if (!(eta_mag > 0.0) || !(eta_mag < 1.0)) {
        throw DomainError("exact family requires 0 < |eta| < 1");
    }
    if (!(s > 0.0) || !std::isfinite(delta)) {
        throw DomainError("exact family requires s > 0 and a finite delta");
    }
    const SqueezeParams vac;
    const SqueezeParams sq(s, 0.0);
    const auto st = solve_coefficients(vac, sq, eta_mag, delta);
    if (!st) {
        throw Error("exact family normalization has no admissible root");
    }
    ExactFamilyResult res;
    res.state = *st;
    const double kappa = 1.0 / std::sqrt(std::cosh(s));
    const double kc = kappa * eta_mag * std::cos(delta);
    res.chi_closed = -kc + std::sqrt(1.0 - eta_mag * eta_mag + kc * kc);
    const double sh = std::sinh(s);
    const double ns = sh * sh;
    const double w = eta_mag * eta_mag;
    res.nbar_closed = w * ns;
    res.g2_closed = 3.0 / w + 1.0 / res.nbar_closed;
    res.g2_gap_closed = 3.0 * (1.0 / w - 1.0);
    res.F_gap_closed = 12.0 * res.nbar_closed * res.nbar_closed * (1.0 / w - 1.0);
    res.F_phase_closed = squeezed_phase_qfi_at_nbar(res.nbar_closed) + res.F_gap_closed;
    res.report = benchmarks(moment_set(res.state));
    return res;
}

} // namespace janus
