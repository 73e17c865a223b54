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
 * Squeezed-vacuum parameters, pairwise overlaps and normalized two-state
 * (Janus) superpositions chi|xi> + eta|zeta>.
 *
 * Conventions: a squeezed vacuum with parameter r e^{i theta} has
 * alpha = tanh(r) e^{i theta}, x = |alpha|^2 and Fock expansion
 * (1-x)^{1/4} sum_n (-alpha)^n (2n-1)!!/sqrt((2n)!) |2n>. For a pair
 * (xi, zeta) we write z = alpha beta^* and Delta = theta - phi. Because
 * |z| < 1, Re(1-z) > 0 and every fractional power of (1-z) is taken on the
 * principal branch.
 */

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>

#include "errors.hpp"

namespace janus {

using cplx = std::complex<double>;

/// Laboratory quadrature axis: Q = (a + a^dag)/sqrt2, P = (a - a^dag)/(i sqrt2).
enum class Axis { Q, P };

inline constexpr double kNormalizationTolerance = 1e-12;

/// One single-mode squeezed vacuum S(r e^{i theta})|0>.
class SqueezeParams {
  public:
    SqueezeParams() = default;

    SqueezeParams(double r, double theta) : r_(r), theta_(theta) {
        if (!std::isfinite(r) || !std::isfinite(theta)) {
            throw DomainError("squeeze parameters must be finite");
        }
        if (r < 0.0) {
            throw DomainError("squeeze magnitude r must be nonnegative, got " +
                              std::to_string(r));
        }
        // 1 - tanh^2 r = sech^2 r underflows far beyond any physical value.
        if (r > 300.0) {
            throw DomainError("squeeze magnitude r too large for double precision");
        }
    }

    [[nodiscard]] double r() const noexcept { return r_; }
    [[nodiscard]] double theta() const noexcept { return theta_; }

    [[nodiscard]] double tanh_r() const noexcept { return std::tanh(r_); }
    [[nodiscard]] double sinh_r() const noexcept { return std::sinh(r_); }
    [[nodiscard]] double cosh_r() const noexcept { return std::cosh(r_); }

    /// x = tanh^2 r, always in [0, 1).
    [[nodiscard]] double x() const noexcept {
        const double t = tanh_r();
        return t * t;
    }

    /// 1 - x evaluated as sech^2 r (no cancellation at large r).
    [[nodiscard]] double one_minus_x() const noexcept {
        const double c = cosh_r();
        return 1.0 / (c * c);
    }

    /// alpha = tanh r e^{i theta}.
    [[nodiscard]] cplx alpha() const noexcept {
        return std::polar(tanh_r(), theta_);
    }

    /// Mean photon number sinh^2 r = x/(1-x).
    [[nodiscard]] double mean_photons() const noexcept {
        const double s = sinh_r();
        return s * s;
    }

    [[nodiscard]] bool is_vacuum() const noexcept { return r_ == 0.0; }

    friend bool operator==(const SqueezeParams &, const SqueezeParams &) = default;

  private:
    double r_ = 0.0;
    double theta_ = 0.0;
};

/// Pairwise invariants of (xi, zeta): z = alpha beta^*, Delta and the
/// overlap S = <zeta|xi>.
struct OverlapData {
    cplx z;
    double Delta = 0.0;
    cplx S;
    /// (1-x)^{1/4}(1-y)^{1/4}
    double prefactor = 1.0;
    /// 1 - z, with the real part assembled without cancellation.
    cplx one_minus_z;
    /// 1 - |S|^2, the Gram determinant of the span.
    double gram_gap = 0.0;
};

[[nodiscard]] inline OverlapData overlap_data(const SqueezeParams &xi,
                                              const SqueezeParams &zeta) {
    OverlapData d;
    d.Delta = xi.theta() - zeta.theta();
    const double p = xi.tanh_r() * zeta.tanh_r();
    d.z = std::polar(p, d.Delta);

    // 1 - p = cosh(r-s) / (cosh r cosh s)
    const double ch = xi.cosh_r() * zeta.cosh_r();
    const double one_minus_p = std::cosh(xi.r() - zeta.r()) / ch;
    const double sh = std::sin(0.5 * d.Delta);
    d.one_minus_z = cplx(one_minus_p + 2.0 * p * sh * sh, -p * std::sin(d.Delta));

    d.prefactor = 1.0 / std::sqrt(ch);
    d.S = d.prefactor / std::sqrt(d.one_minus_z);

    // |1-z|^2 - (1-x)(1-y) = |alpha - beta|^2
    const double w_abs = std::abs(d.one_minus_z);
    const double c2 = d.prefactor * d.prefactor;
    const double diff2 = std::norm(xi.alpha() - zeta.alpha());
    d.gram_gap = diff2 / (w_abs * (w_abs + c2));
    return d;
}

/// <zeta|xi> = (1-x)^{1/4}(1-y)^{1/4}(1-z)^{-1/2}.
[[nodiscard]] inline cplx overlap(const SqueezeParams &xi, const SqueezeParams &zeta) {
    return overlap_data(xi, zeta).S;
}

/// <psi|psi> for chi|xi> + eta|zeta>.
[[nodiscard]] inline double norm_squared(const SqueezeParams &xi, const SqueezeParams &zeta,
                                         cplx chi, cplx eta) {
    const cplx S = overlap(xi, zeta);
    return std::norm(chi) + std::norm(eta) + 2.0 * std::real(chi * std::conj(eta) * S);
}

/// Normalized superposition chi|xi> + eta|zeta>.
class JanusState {
  public:
    /// Validates |chi|^2 + |eta|^2 + 2 Re[chi eta^* <zeta|xi>] = 1. The
    /// tolerance scales with |chi|^2 + |eta|^2, which grows large for
    /// strongly cancelling superpositions of nearly parallel constituents.
    static JanusState make(const SqueezeParams &xi, const SqueezeParams &zeta, cplx chi,
                           cplx eta, double tol = kNormalizationTolerance) {
        const double n2 = norm_squared(xi, zeta, chi, eta);
        const double scale = std::max(1.0, std::norm(chi) + std::norm(eta));
        if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol * scale) {
            throw DomainError("Janus coefficients are not normalized: <psi|psi> = " +
                              std::to_string(n2));
        }
        return JanusState(xi, zeta, chi, eta);
    }

    /// The single squeezed vacuum |p>, stored as chi = 1, eta = 0 with a
    /// vacuum second slot.
    static JanusState single(const SqueezeParams &p) {
        return JanusState(p, SqueezeParams{}, 1.0, 0.0);
    }

    static JanusState vacuum() { return single(SqueezeParams{}); }

    [[nodiscard]] const SqueezeParams &xi() const noexcept { return xi_; }
    [[nodiscard]] const SqueezeParams &zeta() const noexcept { return zeta_; }
    [[nodiscard]] cplx chi() const noexcept { return chi_; }
    [[nodiscard]] cplx eta() const noexcept { return eta_; }

    [[nodiscard]] double normalization_residual() const {
        return norm_squared(xi_, zeta_, chi_, eta_) - 1.0;
    }

  private:
    JanusState(const SqueezeParams &xi, const SqueezeParams &zeta, cplx chi, cplx eta)
        : xi_(xi), zeta_(zeta), chi_(chi), eta_(eta) {}

    SqueezeParams xi_;
    SqueezeParams zeta_;
    cplx chi_;
    cplx eta_;
};

/**
 * Solves the normalization constraint for real chi >= 0 at fixed
 * eta = eta_mag e^{i delta}:
 *
 *   chi^2 + 2 |eta| Re(e^{-i delta} S) chi + (|eta|^2 - 1) = 0.
 *
 * Only the "+" root is used. Returns std::nullopt when that root is not real
 * and nonnegative (the point lies outside the admissible region).
 */
[[nodiscard]] inline std::optional<JanusState>
solve_coefficients(const SqueezeParams &xi, const SqueezeParams &zeta, double eta_mag,
                   double delta) {
    if (!(eta_mag >= 0.0) || !std::isfinite(eta_mag) || !std::isfinite(delta)) {
        throw DomainError("eta magnitude must be finite and nonnegative");
    }
    const cplx S = overlap(xi, zeta);
    const double b = eta_mag * std::real(std::polar(1.0, -delta) * S);
    const double c = 1.0 - eta_mag * eta_mag;
    const double disc = b * b + c;
    if (disc < 0.0) {
        return std::nullopt;
    }
    const double root = std::sqrt(disc);
    // -b + root, rewritten as c / (b + root) when b > 0 to avoid cancellation.
    double chi = 0.0;
    if (b <= 0.0) {
        chi = -b + root;
    } else if (b + root > 0.0) {
        chi = c / (b + root);
    }
    if (chi < 0.0 || !std::isfinite(chi)) {
        return std::nullopt;
    }
    const cplx eta = std::polar(eta_mag, delta);
    return JanusState::make(xi, zeta, chi, eta);
}

/**
 * Normalized state with fixed coefficient ratio t = eta/chi and chi real
 * positive: chi = 1/sqrt(1 + |t|^2 + 2 Re(t^* S)), eta = t chi. For a real
 * overlap and real t this is chi = 1/sqrt(1 + t^2 + 2 S t).
 */
[[nodiscard]] inline JanusState from_ratio(const SqueezeParams &xi, const SqueezeParams &zeta,
                                           cplx t, double tol = 1e-12) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
        throw DomainError("coefficient ratio must be finite");
    }
    const cplx S = overlap(xi, zeta);
    const double denom = 1.0 + std::norm(t) + 2.0 * std::real(std::conj(t) * S);
    if (!(denom > tol)) {
        throw DegenerateSpanError("coefficient ratio annihilates the span: 1 + |t|^2 + "
                                  "2 Re(t* S) = " +
                                  std::to_string(denom));
    }
    const double chi = 1.0 / std::sqrt(denom);
    return JanusState::make(xi, zeta, chi, t * chi);
}

} // namespace janus
