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
 * Truncated Fock-space oracle. Builds photon-number amplitude vectors for
 * squeezed vacua and Janus states and evaluates every quantity of the closed
 * forms by direct summation over ladder-operator matrix elements.
 *
 * Squeezed-vacuum amplitudes are
 *
 *   c_{2n} = (1-x)^{1/4} (-alpha)^n (2n-1)!! / sqrt((2n)!),
 *
 * evaluated as magnitudes in log space with the phase n (theta + pi) kept
 * separately. Successive magnitudes shrink by at least a factor x, so the mass
 * beyond an even cutoff N is bounded by |c_{N+2}|^2 / (1 - x).
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "core_state.hpp"
#include "errors.hpp"
#include "moments.hpp"

namespace janus {

inline constexpr int kDefaultInitialCutoff = 64;
inline constexpr double kDefaultTailThreshold = 1e-12;
inline constexpr int kDefaultMaxCutoff = 4000;

/// Hard cap on the cutoff, overridden by the JANUS_MAX_CUTOFF environment
/// variable when it holds a positive integer.
[[nodiscard]] inline int max_cutoff_from_env() {
    const char *env = std::getenv("JANUS_MAX_CUTOFF");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxCutoff;
    }
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 2 || v > 10'000'000) {
        throw DomainError(std::string("JANUS_MAX_CUTOFF must be an integer >= 2, got '") + env +
                          "'");
    }
    return static_cast<int>(v);
}

struct OracleConfig {
    int initial_cutoff = kDefaultInitialCutoff;
    double tail_threshold = kDefaultTailThreshold;
    int max_cutoff = kDefaultMaxCutoff;

    [[nodiscard]] static OracleConfig from_env() {
        OracleConfig c;
        c.max_cutoff = max_cutoff_from_env();
        return c;
    }
};

struct FockVector {
    /// Amplitudes for photon numbers 0..cutoff.
    std::vector<cplx> amplitudes;
    int cutoff = 0;
    /// Upper bound on the norm of the discarded tail.
    double tail_bound = 0.0;

    [[nodiscard]] double norm_squared() const {
        double s = 0.0;
        for (const cplx &c : amplitudes) {
            s += std::norm(c);
        }
        return s;
    }

    [[nodiscard]] cplx operator[](int n) const {
        return n >= 0 && n <= cutoff ? amplitudes[static_cast<std::size_t>(n)] : cplx{};
    }
};

namespace detail {

inline int even_floor(int n) { return n - (n % 2); }

/// log cosh r without overflow.
inline double log_cosh(double r) {
    return r + std::log1p(std::exp(-2.0 * r)) - std::numbers::ln2;
}

template <class Build> FockVector grow_until_converged(const OracleConfig &cfg, Build build) {
    const int cap = even_floor(cfg.max_cutoff);
    int cutoff = std::min(even_floor(std::max(cfg.initial_cutoff, 2)), cap);
    while (true) {
        FockVector v = build(cutoff);
        if (v.tail_bound < cfg.tail_threshold) {
            return v;
        }
        if (cutoff >= cap) {
            throw CutoffError("Fock cutoff " + std::to_string(cutoff) +
                              " reached the cap with tail bound " + std::to_string(v.tail_bound));
        }
        cutoff = std::min(2 * cutoff, cap);
    }
}

} // namespace detail

/// Squeezed vacuum truncated at a fixed even cutoff.
[[nodiscard]] inline FockVector fock_squeezed(const SqueezeParams &p, int cutoff) {
    if (cutoff < 0 || cutoff % 2 != 0) {
        throw DomainError("Fock cutoff must be even and nonnegative");
    }
    FockVector v;
    v.cutoff = cutoff;
    v.amplitudes.assign(static_cast<std::size_t>(cutoff) + 1, cplx{});
    const double t = p.tanh_r();
    if (t == 0.0) {
        v.amplitudes[0] = 1.0;
        return v;
    }
    const double log_t = std::log(t);
    const double log_x = 2.0 * log_t;
    const double phase = p.theta() + std::numbers::pi;
    // (1-x)^{1/4} = cosh(r)^{-1/2}
    const double log_pref = -0.5 * detail::log_cosh(p.r());
    double log_ratio = 0.0;
    for (int n = 0; 2 * n <= cutoff; ++n) {
        if (n > 0) {
            log_ratio += 0.5 * std::log((2.0 * n - 1.0) / (2.0 * n));
        }
        const double log_mag = log_pref + n * log_t + log_ratio;
        v.amplitudes[static_cast<std::size_t>(2 * n)] = std::polar(std::exp(log_mag), n * phase);
    }
    // First omitted amplitude |c_{N+2}|, then the geometric bound.
    const int n_next = cutoff / 2 + 1;
    const double log_next = log_pref + n_next * log_t + log_ratio +
                            0.5 * std::log((2.0 * n_next - 1.0) / (2.0 * n_next));
    const double log_tail_mass = 2.0 * log_next - std::log1p(-std::exp(log_x));
    v.tail_bound = std::exp(0.5 * log_tail_mass);
    return v;
}

/// Squeezed vacuum with the cutoff doubled from cfg.initial_cutoff until the
/// tail bound drops below the threshold.
[[nodiscard]] inline FockVector fock_squeezed(const SqueezeParams &p,
                                              const OracleConfig &cfg = OracleConfig::from_env()) {
    return detail::grow_until_converged(cfg, [&](int n) { return fock_squeezed(p, n); });
}

/// chi c_n(xi) + eta c_n(zeta) at a fixed even cutoff.
[[nodiscard]] inline FockVector fock_janus(const JanusState &state, int cutoff) {
    const FockVector a = fock_squeezed(state.xi(), cutoff);
    const FockVector b = fock_squeezed(state.zeta(), cutoff);
    FockVector v;
    v.cutoff = cutoff;
    v.amplitudes.resize(a.amplitudes.size());
    for (std::size_t i = 0; i < v.amplitudes.size(); ++i) {
        v.amplitudes[i] = state.chi() * a.amplitudes[i] + state.eta() * b.amplitudes[i];
    }
    v.tail_bound = std::abs(state.chi()) * a.tail_bound + std::abs(state.eta()) * b.tail_bound;
    return v;
}

[[nodiscard]] inline FockVector fock_janus(const JanusState &state,
                                           const OracleConfig &cfg = OracleConfig::from_env()) {
    return detail::grow_until_converged(cfg, [&](int n) { return fock_janus(state, n); });
}

/// <bra| a^{dag p} a^q |ket>.
[[nodiscard]] inline cplx oracle_sandwich(const FockVector &bra, const FockVector &ket, int p,
                                          int q) {
    if (p < 0 || q < 0) {
        throw DomainError("ladder powers must be nonnegative");
    }
    cplx sum = 0.0;
    for (int n = q; n <= ket.cutoff; ++n) {
        const int k = n - q;
        const int m = k + p;
        if (m > bra.cutoff) {
            break;
        }
        const cplx c = ket.amplitudes[static_cast<std::size_t>(n)];
        if (c == cplx{}) {
            continue;
        }
        // sqrt(n!/k!) sqrt(m!/k!)
        double f = 1.0;
        for (int j = k + 1; j <= n; ++j) {
            f *= std::sqrt(static_cast<double>(j));
        }
        for (int j = k + 1; j <= m; ++j) {
            f *= std::sqrt(static_cast<double>(j));
        }
        sum += std::conj(bra.amplitudes[static_cast<std::size_t>(m)]) * c * f;
    }
    return sum;
}

/// Sum of term magnitudes in oracle_sandwich; eps times this bounds its
/// rounding error up to a modest factor.
[[nodiscard]] inline double oracle_sandwich_magnitude(const FockVector &bra, const FockVector &ket,
                                                      int p, int q) {
    if (p < 0 || q < 0) {
        throw DomainError("ladder powers must be nonnegative");
    }
    double sum = 0.0;
    for (int n = q; n <= ket.cutoff; ++n) {
        const int k = n - q;
        const int m = k + p;
        if (m > bra.cutoff) {
            break;
        }
        const cplx c = ket.amplitudes[static_cast<std::size_t>(n)];
        if (c == cplx{}) {
            continue;
        }
        // sqrt(n!/k!) sqrt(m!/k!)
        double f = 1.0;
        for (int j = k + 1; j <= n; ++j) {
            f *= std::sqrt(static_cast<double>(j));
        }
        for (int j = k + 1; j <= m; ++j) {
            f *= std::sqrt(static_cast<double>(j));
        }
        sum += std::abs(bra.amplitudes[static_cast<std::size_t>(m)]) * std::abs(c) * f;
    }
    return sum;
}

/// <bra|Q^2|ket> or <bra|P^2|ket> from Q^2 = (a^2 + a^{dag 2} + 2 a^dag a + 1)/2
/// and P^2 = (-a^2 - a^{dag 2} + 2 a^dag a + 1)/2.
[[nodiscard]] inline cplx oracle_quadrature_square(const FockVector &bra, const FockVector &ket,
                                                   Axis axis) {
    const cplx anom = oracle_sandwich(bra, ket, 0, 2) + oracle_sandwich(bra, ket, 2, 0);
    const cplx iso = 2.0 * oracle_sandwich(bra, ket, 1, 1) + oracle_sandwich(bra, ket, 0, 0);
    return 0.5 * (axis == Axis::Q ? iso + anom : iso - anom);
}

/// Moments by direct summation. Values are not divided by the vector norm.
[[nodiscard]] inline MomentSet oracle_moments(const FockVector &v) {
    MomentSet ms;
    ms.N1 = oracle_sandwich(v, v, 1, 1).real();
    ms.N2 = oracle_sandwich(v, v, 2, 2).real();
    ms.M2 = oracle_sandwich(v, v, 0, 2);
    ms.M4 = oracle_sandwich(v, v, 0, 4);
    ms.mean_a = oracle_sandwich(v, v, 0, 1);
    ms.nbar = ms.N1 - std::norm(ms.mean_a);
    ms.m = ms.M2 - ms.mean_a * ms.mean_a;
    return ms;
}

/// 4 Var(a^dag a) by direct summation.
[[nodiscard]] inline double oracle_phase_qfi(const FockVector &v) {
    double n1 = 0.0;
    double n2 = 0.0;
    for (int n = 0; n <= v.cutoff; ++n) {
        const double w = std::norm(v.amplitudes[static_cast<std::size_t>(n)]);
        n1 += n * w;
        n2 += static_cast<double>(n) * n * w;
    }
    return 4.0 * (n2 - n1 * n1);
}

/// 4 Var(G) for G_theta (first) and G_r (second) at axis vartheta, from the
/// explicit vector G|psi>.
[[nodiscard]] inline std::pair<double, double> oracle_quadratic_qfi(const FockVector &v,
                                                                    double vartheta) {
    const int dim = v.cutoff + 3;
    const cplx em = std::polar(1.0, -vartheta);
    const cplx ep = std::conj(em);
    // a^2|psi> and a^{dag 2}|psi>
    std::vector<cplx> lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
    for (int n = 0; n <= v.cutoff; ++n) {
        const cplx c = v.amplitudes[static_cast<std::size_t>(n)];
        if (n >= 2) {
            lo[static_cast<std::size_t>(n - 2)] += c * std::sqrt(static_cast<double>(n) * (n - 1));
        }
        hi[static_cast<std::size_t>(n + 2)] += c * std::sqrt(static_cast<double>(n + 1) * (n + 2));
    }
    auto variance = [&](cplx w_lo, cplx w_hi) {
        cplx mean = 0.0;
        double sq = 0.0;
        for (int n = 0; n < dim; ++n) {
            const cplx g = w_lo * lo[static_cast<std::size_t>(n)] + w_hi * hi[static_cast<std::size_t>(n)];
            sq += std::norm(g);
            mean += std::conj(v[n]) * g;
        }
        return 4.0 * (sq - std::norm(mean));
    };
    const cplx half_i(0.0, 0.5);
    return {variance(0.5 * em, 0.5 * ep), variance(half_i * em, -half_i * ep)};
}

/// D(alpha0)|v> on a truncated space, by repeated Taylor steps of the
/// truncated generator alpha0 a^dag - alpha0^* a. The working dimension
/// doubles until the mass in the top tenth of the space is below threshold.
[[nodiscard]] inline FockVector oracle_displace(const FockVector &v, cplx alpha0,
                                                const OracleConfig &cfg = OracleConfig::from_env()) {
    if (alpha0 == cplx{}) {
        return v;
    }
    const double amag = std::abs(alpha0);
    const cplx ac = std::conj(alpha0);
    if (v.cutoff >= cfg.max_cutoff) {
        throw CutoffError("displaced vector does not fit below the Fock cutoff cap");
    }
    int dim = std::max(2 * v.cutoff, v.cutoff + 64 + static_cast<int>(std::ceil(8.0 * amag * amag)));
    dim = std::min(dim, cfg.max_cutoff + 1);
    while (true) {
        const int cutoff = dim - 1;
        const int steps = static_cast<int>(std::ceil(2.0 * amag * std::sqrt(dim) / 0.5));
        std::vector<cplx> w(static_cast<std::size_t>(dim));
        for (int n = 0; n <= v.cutoff; ++n) {
            w[static_cast<std::size_t>(n)] = v.amplitudes[static_cast<std::size_t>(n)];
        }
        std::vector<cplx> term(w.size()), next(w.size());
        const double scale = 1.0 / steps;
        for (int s = 0; s < steps; ++s) {
            term = w;
            for (int j = 1; j < 200; ++j) {
                double tnorm = 0.0;
                for (int n = 0; n < dim; ++n) {
                    cplx g = 0.0;
                    if (n >= 1) {
                        g += alpha0 * std::sqrt(static_cast<double>(n)) *
                             term[static_cast<std::size_t>(n - 1)];
                    }
                    if (n + 1 < dim) {
                        g -= ac * std::sqrt(static_cast<double>(n + 1)) *
                             term[static_cast<std::size_t>(n + 1)];
                    }
                    next[static_cast<std::size_t>(n)] = g * (scale / j);
                    tnorm += std::norm(next[static_cast<std::size_t>(n)]);
                }
                std::swap(term, next);
                for (int n = 0; n < dim; ++n) {
                    w[static_cast<std::size_t>(n)] += term[static_cast<std::size_t>(n)];
                }
                if (tnorm < 1e-36) {
                    break;
                }
            }
        }
        double band = 0.0;
        for (int n = dim - dim / 10; n < dim; ++n) {
            band += std::norm(w[static_cast<std::size_t>(n)]);
        }
        const double tail = std::sqrt(band) + v.tail_bound;
        if (tail < cfg.tail_threshold) {
            FockVector out;
            out.cutoff = cutoff;
            out.amplitudes = std::move(w);
            out.tail_bound = tail;
            return out;
        }
        if (dim >= cfg.max_cutoff + 1) {
            throw CutoffError("displaced vector does not fit below the Fock cutoff cap");
        }
        dim = std::min(2 * dim, cfg.max_cutoff + 1);
    }
}

} // namespace janus
