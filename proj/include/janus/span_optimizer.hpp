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
 * Minimum fixed-axis variance inside the span of two squeezed vacua.
 *
 * With the constituents held fixed and only (chi, eta) varied, <Q^2> is the
 * Rayleigh quotient c^dag M c / c^dag S c of the pencil
 *
 *   M = [[A, C^*], [C, B]],   S = [[1, S^*], [S, 1]],
 *
 * with A = <xi|Q^2|xi>, B = <zeta|Q^2|zeta>, C = <zeta|Q^2|xi> and
 * S = <zeta|xi>. Its smallest generalized eigenvalue is the optimum.
 * The characteristic polynomial det(M - lambda S) is
 *
 *   (1-|S|^2) lambda^2 - [(A+B) - 2 Re(S^* C)] lambda + (A B - |C|^2).
 */

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "core_state.hpp"
#include "errors.hpp"

namespace janus {

struct SpanMatrices {
    Axis axis = Axis::Q;
    double A = 0.5;
    double B = 0.5;
    cplx C;
    cplx S;
    /// 1 - |S|^2
    double gram_gap = 0.0;
};

struct SpanOptimum {
    double lambda_minus = 0.0;
    double lambda_plus = 0.0;
    /// eta/chi at the minimizer.
    cplx ratio;
    /// Normalized minimizer, chi real and positive.
    cplx chi;
    cplx eta;
    double discriminant = 0.0;
    /// True when the pencil was solved after a Cholesky reduction of the Gram
    /// matrix instead of through the closed quadratic.
    bool orthonormalized = false;
    SpanMatrices matrices;
};

/// Coefficients of the equal-strength (r = s) characteristic quadratic
/// gamma lambda^2 - alpha lambda + beta.
struct EqualStrengthCoeffs {
    double alpha_c = 0.0;
    double beta_c = 0.0;
    double gamma_c = 0.0;
    /// |N_Q|^2 with N_Q = 1 + x e^{i Delta} - sqrt(x) e^{i theta} - sqrt(x) e^{-i phi}.
    double NQ_abs2 = 0.0;
};

struct SpanOptions {
    /// Spans with |S| >= 1 - epsilon_span are rejected as collapsed.
    double epsilon_span = 1e-8;
};

/// Above this overlap the closed quadratic loses significance and the pencil
/// is reduced with the Cholesky factor of the Gram matrix instead.
inline constexpr double kNearDegenerateOverlap = 1.0 - 1e-8;

namespace detail {

inline double sin_half_sq(double angle) {
    const double s = std::sin(0.5 * angle);
    return s * s;
}

inline double cos_half_sq(double angle) {
    const double c = std::cos(0.5 * angle);
    return c * c;
}

/// 1 - |S| from the Gram gap without cancellation.
inline double one_minus_abs_overlap(const SpanMatrices &sm) {
    return sm.gram_gap / (1.0 + std::abs(sm.S));
}

} // namespace detail

/// <p|Q^2|p> = e^{-2r}/2 + sinh(2r) sin^2(theta/2), and the P analogue with
/// cos^2(theta/2).
[[nodiscard]] inline double single_axis_variance(const SqueezeParams &p, Axis axis) {
    const double base = 0.5 * std::exp(-2.0 * p.r());
    const double lever = std::sinh(2.0 * p.r());
    return axis == Axis::Q ? base + lever * detail::sin_half_sq(p.theta())
                           : base + lever * detail::cos_half_sq(p.theta());
}

/**
 * Closed matrix elements of Q^2 (or P^2) in the span of xi and zeta.
 *
 * C_Q = c (1+z-alpha-beta^*) / (2 (1-z)^{3/2}); the numerator factorizes as
 * (1-alpha)(1-beta^*), which is how it is evaluated. C_P flips both signs.
 */
[[nodiscard]] inline SpanMatrices span_matrices(const SqueezeParams &xi, const SqueezeParams &zeta,
                                                Axis axis) {
    const OverlapData ov = overlap_data(xi, zeta);
    SpanMatrices sm;
    sm.axis = axis;
    sm.A = single_axis_variance(xi, axis);
    sm.B = single_axis_variance(zeta, axis);
    sm.S = ov.S;
    sm.gram_gap = ov.gram_gap;
    const double sign = axis == Axis::Q ? -1.0 : 1.0;
    const cplx numer = (1.0 + sign * xi.alpha()) * (1.0 + sign * std::conj(zeta.alpha()));
    sm.C = ov.prefactor * numer / (2.0 * std::pow(ov.one_minus_z, 1.5));
    return sm;
}

/// det(M - lambda S) = (A - lambda)(B - lambda) - |C - lambda S|^2.
[[nodiscard]] inline double characteristic_polynomial(const SpanMatrices &sm, double lambda) {
    return (sm.A - lambda) * (sm.B - lambda) - std::norm(sm.C - lambda * sm.S);
}

namespace detail {

inline void normalize_from_ratio(SpanOptimum &opt) {
    const SpanMatrices &sm = opt.matrices;
    const double denom =
        1.0 + std::norm(opt.ratio) + 2.0 * std::real(std::conj(opt.ratio) * sm.S);
    opt.chi = 1.0 / std::sqrt(denom);
    opt.eta = opt.ratio * opt.chi;
}

/// First row of the pencil, switching to the second row when the first
/// denominator vanishes.
inline cplx minimizing_ratio(const SpanMatrices &sm, double lambda) {
    constexpr double kDivisionGuard = 1e-13;
    const cplx den1 = std::conj(sm.C) - lambda * std::conj(sm.S);
    const cplx num1 = sm.A - lambda;
    const cplx den2 = sm.B - lambda;
    const cplx num2 = sm.C - lambda * sm.S;
    if (std::abs(den1) >= kDivisionGuard) {
        return -num1 / den1;
    }
    if (std::abs(den2) > std::abs(den1)) {
        return -num2 / den2;
    }
    // Both rows vanish: every vector in the span is an eigenvector.
    return {0.0, 0.0};
}

inline SpanOptimum solve_closed(const SpanMatrices &sm) {
    SpanOptimum opt;
    opt.matrices = sm;
    const double a = sm.gram_gap;
    const double b = (sm.A + sm.B) - 2.0 * std::real(std::conj(sm.S) * sm.C);
    const double c = sm.A * sm.B - std::norm(sm.C);
    double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) {
        if (disc < -1e-12 * std::max(1.0, b * b)) {
            throw Error("negative discriminant in Hermitian pencil: " + std::to_string(disc));
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    opt.discriminant = disc;
    opt.lambda_plus = (b + root) / (2.0 * a);
    // Product of the roots is c/a.
    opt.lambda_minus = 2.0 * c / (b + root);
    opt.ratio = minimizing_ratio(sm, opt.lambda_minus);
    normalize_from_ratio(opt);
    return opt;
}

} // namespace detail

/**
 * Solves the pencil after the Cholesky reduction S = L L^dag, i.e. finds the
 * spectrum of the Hermitian matrix H = L^{-1} M L^{-dag} and maps the
 * eigenvector back through L^{-dag}.
 */
[[nodiscard]] inline SpanOptimum span_minimum_orthonormalized(const SpanMatrices &sm) {
    if (!(sm.gram_gap > 0.0)) {
        throw DegenerateSpanError("Gram matrix is singular");
    }
    SpanOptimum opt;
    opt.matrices = sm;
    opt.orthonormalized = true;
    const double ell = std::sqrt(sm.gram_gap);
    const double h11 = sm.A;
    const cplx h21 = (sm.C - sm.S * sm.A) / ell;
    const double h22 = (sm.B + std::norm(sm.S) * sm.A - 2.0 * std::real(sm.S * std::conj(sm.C))) /
                       sm.gram_gap;
    const double mean = 0.5 * (h11 + h22);
    const double half_gap = 0.5 * (h11 - h22);
    const double rad = std::hypot(half_gap, std::abs(h21));
    opt.lambda_minus = mean - rad;
    opt.lambda_plus = mean + rad;
    // Pencil discriminant equals (gram_gap (lambda_+ - lambda_-))^2.
    opt.discriminant = std::pow(sm.gram_gap * 2.0 * rad, 2);

    // Eigenvector of H for lambda_-: pick the better conditioned of the two
    // candidate forms.
    cplx y1 = std::conj(h21);
    cplx y2 = opt.lambda_minus - h11;
    const cplx alt1 = opt.lambda_minus - h22;
    const cplx alt2 = h21;
    if (std::norm(alt1) + std::norm(alt2) > std::norm(y1) + std::norm(y2)) {
        y1 = alt1;
        y2 = alt2;
    }
    if (std::abs(y1) + std::abs(y2) == 0.0) {
        y1 = 1.0;
        y2 = 0.0;
    }
    // c = L^{-dag} y with L^{-dag} = [[1, -S^*/ell], [0, 1/ell]].
    const cplx c1 = y1 - std::conj(sm.S) * y2 / ell;
    const cplx c2 = y2 / ell;
    if (std::abs(c1) == 0.0) {
        throw DegenerateSpanError("minimizer has no xi component");
    }
    opt.ratio = c2 / c1;
    detail::normalize_from_ratio(opt);
    return opt;
}

/// Smallest fixed-axis variance over normalized superpositions of xi and zeta.
[[nodiscard]] inline SpanOptimum span_minimum(const SqueezeParams &xi, const SqueezeParams &zeta,
                                              Axis axis, const SpanOptions &opts = {}) {
    const SpanMatrices sm = span_matrices(xi, zeta, axis);
    const double gap = detail::one_minus_abs_overlap(sm);
    if (gap <= opts.epsilon_span) {
        throw DegenerateSpanError("span collapsed: 1 - |S| = " + std::to_string(gap) +
                                  "; use the single-state variance");
    }
    if (std::abs(sm.S) > kNearDegenerateOverlap) {
        return span_minimum_orthonormalized(sm);
    }
    return detail::solve_closed(sm);
}

/// Equal-strength coefficients for r = s and Delta = theta - phi != 0.
[[nodiscard]] inline EqualStrengthCoeffs equal_strength_coeffs(double r, double theta, double phi) {
    constexpr double kDeltaGuard = 1e-6;
    const double delta = theta - phi;
    const double wrapped = std::remainder(delta, 2.0 * std::numbers::pi);
    if (std::abs(wrapped) < kDeltaGuard) {
        throw DegenerateSpanError("equal-strength span collapses at Delta = 0 (mod 2 pi)");
    }
    const SqueezeParams p(r, theta);
    const double sx = p.tanh_r();
    const double x = sx * sx;
    const double omx = p.one_minus_x();
    // |1 - x e^{i Delta}|
    const double mod = std::sqrt(omx * omx + 4.0 * x * detail::sin_half_sq(delta));
    const double mod3 = mod * mod * mod;
    const double A = single_axis_variance(p, Axis::Q);
    const double B = single_axis_variance(SqueezeParams(r, phi), Axis::Q);
    // 1 + x - 2 sqrt(x) cos(angle) = (1 - sqrt x)^2 + 4 sqrt(x) sin^2(angle/2)
    const double one_m_sx = std::exp(-r) / std::cosh(r);
    const double fac_t = one_m_sx * one_m_sx + 4.0 * sx * detail::sin_half_sq(theta);
    const double fac_p = one_m_sx * one_m_sx + 4.0 * sx * detail::sin_half_sq(phi);

    EqualStrengthCoeffs k;
    k.NQ_abs2 = fac_t * fac_p;
    // (1 + x) - sqrt(x)(cos theta + cos phi) = (fac_t + fac_p) / 2
    k.alpha_c = (A + B) - omx * omx / mod3 * 0.5 * (fac_t + fac_p);
    k.beta_c = A * B - omx / (4.0 * mod3) * k.NQ_abs2;
    // 1 - (1-x)/mod, with mod^2 - (1-x)^2 = 4 x sin^2(Delta/2)
    k.gamma_c = 4.0 * x * detail::sin_half_sq(delta) / (mod * (mod + omx));
    return k;
}

/// Analytic (Delta Q)^2_min = (alpha - sqrt(alpha^2 - 4 gamma beta)) / (2 gamma)
/// on the equal-strength family, evaluated as 2 beta / (alpha + sqrt(...)).
[[nodiscard]] inline double equal_strength_minimum(double r, double theta, double phi) {
    const EqualStrengthCoeffs k = equal_strength_coeffs(r, theta, phi);
    double disc = k.alpha_c * k.alpha_c - 4.0 * k.gamma_c * k.beta_c;
    if (disc < 0.0) {
        disc = 0.0;
    }
    return 2.0 * k.beta_c / (k.alpha_c + std::sqrt(disc));
}

/// Span matrices of the aligned slice theta = phi = 0 in closed hyperbolic
/// form: S = 1/sqrt(cosh(r-s)), A = e^{-2r}/2, B = e^{-2s}/2 and
/// C = S e^{-(r+s)} / (2 cosh(r-s)).
[[nodiscard]] inline SpanMatrices aligned_span_matrices(double r, double s) {
    if (!(r >= 0.0) || !(s >= 0.0)) {
        throw DomainError("aligned family requires r, s >= 0");
    }
    SpanMatrices sm;
    sm.axis = Axis::Q;
    const double ch = std::cosh(r - s);
    const double S = 1.0 / std::sqrt(ch);
    sm.S = S;
    sm.A = 0.5 * std::exp(-2.0 * r);
    sm.B = 0.5 * std::exp(-2.0 * s);
    sm.C = S * std::exp(-(r + s)) / (2.0 * ch);
    const double sh = std::sinh(0.5 * (r - s));
    sm.gram_gap = 2.0 * sh * sh / ch;
    return sm;
}

/// Coefficient optimum on the aligned slice; requires r != s.
[[nodiscard]] inline SpanOptimum aligned_optimum(double r, double s) {
    if (r == s) {
        throw DegenerateSpanError("aligned family with r = s spans a single state");
    }
    const SpanMatrices sm = aligned_span_matrices(r, s);
    if (std::abs(sm.S) > kNearDegenerateOverlap) {
        return span_minimum_orthonormalized(sm);
    }
    return detail::solve_closed(sm);
}

} // namespace janus
