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
 * Randomized cross-check of every closed form against the Fock oracle, plus
 * the physical invariants that hold for all pure states.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "core_state.hpp"
#include "fock_oracle.hpp"
#include "moments.hpp"
#include "qfi.hpp"
#include "quadrature.hpp"
#include "sampling.hpp"
#include "span_optimizer.hpp"

namespace janus {

inline constexpr double kOracleRelTol = 1e-8;
inline constexpr double kOracleAbsTol = 1e-10;
inline constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SuiteResult {
    std::string name;
    int checks = 0;
    int passed = 0;
    /// Largest |a - b| seen.
    double worst_abs = 0.0;
    /// Largest |a - b| / max(rel |b|, abs); a value <= 1 passes.
    double worst_ratio = 0.0;

    [[nodiscard]] bool ok() const { return passed == checks; }

    void compare(cplx got, cplx want, double rel = kOracleRelTol, double abs = kOracleAbsTol) {
        const double err = std::abs(got - want);
        const double tol = std::max(rel * std::abs(want), abs);
        record(err, err / tol, err <= tol);
    }

    /// Records value >= bound - slack.
    void at_least(double value, double bound, double slack) {
        const double deficit = std::max(0.0, bound - value);
        record(deficit, deficit / slack, value >= bound - slack);
    }

    void require(bool cond) { record(cond ? 0.0 : 1.0, cond ? 0.0 : 1.0, cond); }

  private:
    void record(double err, double ratio, bool pass) {
        ++checks;
        passed += pass ? 1 : 0;
        worst_abs = std::max(worst_abs, err);
        worst_ratio = std::max(worst_ratio, ratio);
    }
};

struct VerifyOptions {
    std::uint64_t seed = 1;
    int samples = 200;
    double r_max = 1.5;
    OracleConfig oracle = OracleConfig::from_env();
    /// Widen the absolute tolerance of the cross-moment suite to the oracle's
    /// rounding floor 4 sqrt(N) eps sum|terms|. Off means fixed tolerances only.
    bool rounding_floor = true;
};

struct VerifyReport {
    std::vector<SuiteResult> suites;
    int max_cutoff = 0;
    int samples = 0;

    [[nodiscard]] bool ok() const {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.ok(); });
    }

    [[nodiscard]] std::string summary() const {
        std::string out;
        char buf[160];
        for (const SuiteResult &s : suites) {
            std::snprintf(buf, sizeof buf, "%-14s %6d/%-6d worst_abs=%.3e worst_tol_ratio=%.3e %s\n",
                          s.name.c_str(), s.passed, s.checks, s.worst_abs, s.worst_ratio,
                          s.ok() ? "PASS" : "FAIL");
            out += buf;
        }
        std::snprintf(buf, sizeof buf, "samples=%d max_cutoff=%d result=%s\n", samples, max_cutoff,
                      ok() ? "PASS" : "FAIL");
        out += buf;
        return out;
    }
};

[[nodiscard]] inline VerifyReport run_verification(const VerifyOptions &opt) {
    if (opt.samples < 1 || !(opt.r_max >= 0.0)) {
        throw DomainError("verification needs samples >= 1 and r cap >= 0");
    }
    SuiteResult overlap_s{"overlap"}, norm_s{"norm"}, parity_s{"parity"}, moments_s{"moments"},
        cross_s{"cross_moments"}, span_s{"span_elements"}, var_s{"variances"}, qfi_s{"qfi"},
        inv_s{"invariants"};
    VerifyReport rep;
    rep.samples = opt.samples;
    Sampler rng(opt.seed);
    RandomStateOptions ropt;
    ropt.r_max = opt.r_max;

    for (int i = 0; i < opt.samples; ++i) {
        const JanusState st = random_janus(rng, ropt);
        const double vartheta = rng.phase();
        const FockVector v = fock_janus(st, opt.oracle);
        rep.max_cutoff = std::max(rep.max_cutoff, v.cutoff);
        const FockVector vx = fock_squeezed(st.xi(), v.cutoff);
        const FockVector vz = fock_squeezed(st.zeta(), v.cutoff);

        overlap_s.compare(oracle_sandwich(vz, vx, 0, 0), overlap(st.xi(), st.zeta()));
        norm_s.compare(v.norm_squared(), 1.0);
        bool odd_zero = true;
        for (int n = 1; n <= v.cutoff; n += 2) {
            odd_zero = odd_zero && v[n] == cplx{};
        }
        parity_s.require(odd_zero);

        const MomentSet closed = moment_set(st);
        const MomentSet oracle = oracle_moments(v);
        moments_s.compare(oracle.N1, closed.N1);
        moments_s.compare(oracle.N2, closed.N2);
        moments_s.compare(oracle.M2, closed.M2);
        moments_s.compare(oracle.M4, closed.M4);

        const double floor_scale =
            opt.rounding_floor ? 4.0 * std::sqrt(static_cast<double>(v.cutoff)) * kEps : 0.0;
        for (int k = 1; k <= 4; ++k) {
            const double abs_a = std::max(kOracleAbsTol, floor_scale * oracle_sandwich_magnitude(vz, vx, 0, 2 * k));
            const double abs_b = std::max(kOracleAbsTol, floor_scale * oracle_sandwich_magnitude(vx, vz, 0, 2 * k));
            cross_s.compare(oracle_sandwich(vz, vx, 0, 2 * k), cross_even_moment(st.xi(), st.zeta(), k),
                            kOracleRelTol, abs_a);
            cross_s.compare(oracle_sandwich(vx, vz, 0, 2 * k), cross_even_moment(st.zeta(), st.xi(), k),
                            kOracleRelTol, abs_b);
        }

        for (Axis axis : {Axis::Q, Axis::P}) {
            const SpanMatrices sm = span_matrices(st.xi(), st.zeta(), axis);
            span_s.compare(oracle_quadrature_square(vx, vx, axis), sm.A);
            span_s.compare(oracle_quadrature_square(vz, vz, axis), sm.B);
            span_s.compare(oracle_quadrature_square(vz, vx, axis), sm.C);
        }

        const CovarianceSummary cc = covariance(closed);
        const CovarianceSummary co = covariance(oracle);
        var_s.compare(co.VQQ, cc.VQQ);
        var_s.compare(co.VPP, cc.VPP);
        var_s.compare(co.VQP, cc.VQP);
        var_s.compare(co.Vmin, cc.Vmin);
        var_s.compare(co.Vmax, cc.Vmax);
        var_s.compare(oracle_quadrature_square(v, v, Axis::Q), cc.VQQ);

        qfi_s.compare(oracle_phase_qfi(v), phase_qfi(closed));
        const auto [ft, fr] = quadratic_qfi(closed, vartheta);
        const auto [oft, ofr] = oracle_quadratic_qfi(v, vartheta);
        qfi_s.compare(oft, ft);
        qfi_s.compare(ofr, fr);

        inv_s.at_least(cc.Vmin, no_go_bound(closed.nbar), 1e-10);
        inv_s.at_least(cc.determinant(), 0.25, 1e-10);
        inv_s.at_least(std::sqrt(closed.nbar * (closed.nbar + 1.0)), std::abs(closed.m), 1e-10);
        inv_s.at_least(phase_qfi(closed), 0.0, 1e-10);
        try {
            const SpanOptimum opt = span_minimum(st.xi(), st.zeta(), Axis::Q);
            const SpanMatrices &sm = opt.matrices;
            inv_s.at_least(std::min(sm.A, sm.B), opt.lambda_minus, 1e-12);
            const JanusState best = JanusState::make(st.xi(), st.zeta(), opt.chi, opt.eta, 1e-9);
            const CovarianceSummary cb = covariance(moment_set(best));
            inv_s.at_least(opt.lambda_minus * cb.VPP, 0.25, 1e-9);
        } catch (const DegenerateSpanError &) {
        }
    }
    rep.suites = {overlap_s, norm_s, parity_s, moments_s, cross_s, span_s, var_s, qfi_s, inv_s};
    return rep;
}

} // namespace janus
