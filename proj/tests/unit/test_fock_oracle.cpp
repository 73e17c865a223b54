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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "janus/families.hpp"
#include "janus/fock_oracle.hpp"
#include "janus/moments.hpp"
#include "janus/quadrature.hpp"
#include "janus/sampling.hpp"
#include "janus/verify.hpp"
#include "support/oracles.hpp"

using namespace janus;
using janus::testing::close_rel;

TEST_CASE("squeezed vacuum vectors", "[oracle]") {
    SECTION("vacuum") {
        const FockVector v = fock_squeezed(SqueezeParams{});
        CHECK(v.amplitudes[0] == cplx(1.0));
        for (int n = 1; n <= v.cutoff; ++n) {
            CHECK(v[n] == cplx(0.0));
        }
        CHECK(v.tail_bound == 0.0);
    }
    SECTION("amplitudes follow the even-Fock expansion") {
        const SqueezeParams p(0.6, 0.7);
        const FockVector v = fock_squeezed(p, 20);
        const cplx a = p.alpha();
        const double pref = std::pow(1.0 - p.x(), 0.25);
        CHECK(close_rel(v[2], pref * (-a) * 1.0 / std::sqrt(2.0), 1e-14));
        CHECK(close_rel(v[4], pref * a * a * 3.0 / std::sqrt(24.0), 1e-14));
        CHECK(close_rel(v[6], pref * (-a * a * a) * 15.0 / std::sqrt(720.0), 1e-14));
        CHECK(v[3] == cplx(0.0));
    }
    SECTION("norm and overlap at r = 0.5") {
        const FockVector v = fock_squeezed(SqueezeParams(0.5, 0.0));
        CHECK(std::abs(v.norm_squared() - 1.0) < 1e-12);
        const FockVector w = fock_squeezed(SqueezeParams(0.3, 0.0), v.cutoff);
        CHECK(close_rel(oracle_sandwich(w, v, 0, 0), overlap(SqueezeParams(0.5, 0.0), SqueezeParams(0.3, 0.0)), 1e-10));
    }
    SECTION("adaptive cutoff at r = 1.5") {
        const FockVector v = fock_squeezed(SqueezeParams(1.5, 0.0));
        CHECK(v.tail_bound < 1e-12);
        CHECK(v.cutoff >= 64);
        CHECK(v.cutoff % 2 == 0);
        const double n2 = v.norm_squared();
        CHECK(n2 <= 1.0 + 1e-13);
        CHECK(n2 >= 1.0 - v.tail_bound - 1e-13);
        // x = tanh^2(1.5) ~ 0.818 needs N ~ 550 for a 1e-12 tail, so doubling from 64 stops at 1024.
        CHECK(v.cutoff == 1024);
    }
    SECTION("tail bound is rigorous") {
        const SqueezeParams p(1.0, 0.2);
        const FockVector small = fock_squeezed(p, 40);
        const FockVector big = fock_squeezed(p, 800);
        double tail = 0.0;
        for (int n = 42; n <= 800; ++n) {
            tail += std::norm(big[n]);
        }
        CHECK(std::sqrt(tail) <= small.tail_bound);
        CHECK(small.tail_bound < 10.0 * std::sqrt(tail));
    }
    SECTION("large squeezing overflows neither amplitudes nor factorials") {
        const FockVector v = fock_squeezed(SqueezeParams(2.0, 0.0));
        CHECK(std::abs(v.norm_squared() - 1.0) < 1e-11);
    }
    CHECK_THROWS_AS(fock_squeezed(SqueezeParams(0.3, 0.0), 7), DomainError);
    CHECK_THROWS_AS(fock_squeezed(SqueezeParams(0.3, 0.0), -2), DomainError);
}

TEST_CASE("cutoff cap", "[oracle]") {
    OracleConfig cfg;
    cfg.max_cutoff = 128;
    CHECK_THROWS_AS(fock_squeezed(SqueezeParams(2.5, 0.0), cfg), CutoffError);
    cfg.max_cutoff = 4000;
    const FockVector v = fock_squeezed(SqueezeParams(2.5, 0.0), cfg);
    CHECK(v.cutoff == 4000);
    CHECK(v.tail_bound < 1e-12);
}

TEST_CASE("cutoff cap from the environment", "[oracle]") {
    ::setenv("JANUS_MAX_CUTOFF", "256", 1);
    CHECK(OracleConfig::from_env().max_cutoff == 256);
    CHECK_THROWS_AS(fock_squeezed(SqueezeParams(2.0, 0.0)), CutoffError);
    ::setenv("JANUS_MAX_CUTOFF", "lots", 1);
    CHECK_THROWS_AS(OracleConfig::from_env(), DomainError);
    ::unsetenv("JANUS_MAX_CUTOFF");
    CHECK(OracleConfig::from_env().max_cutoff == kDefaultMaxCutoff);
}

TEST_CASE("Janus vectors", "[oracle]") {
    SECTION("eta = 0 reduces to the first constituent") {
        const SqueezeParams p(0.7, 0.2);
        const JanusState st = JanusState::make(p, SqueezeParams(0.4, 1.0), 1.0, 0.0);
        const FockVector a = fock_janus(st);
        const FockVector b = fock_squeezed(p, a.cutoff);
        for (int n = 0; n <= a.cutoff; ++n) {
            CHECK(a[n] == b[n]);
        }
    }
    SECTION("two-photon cancellation") {
        Sampler rng(51);
        for (int i = 0; i < 20; ++i) {
            const double x = rng.uniform(0.01, 0.8);
            const double delta = rng.uniform(0.1, 2.0 * std::numbers::pi - 0.1);
            const FockVector v = fock_janus(two_photon_cancelling(r_from_x(x), 0.0, -delta));
            CHECK(std::abs(v[2]) < 1e-12);
            CHECK(std::abs(v[4]) > 1e-6);
        }
    }
    SECTION("norm, parity and moments over random states") {
        Sampler rng(52);
        RandomStateOptions opt;
        opt.r_max = 1.5;
        for (int i = 0; i < 100; ++i) {
            const JanusState st = random_janus(rng, opt);
            const FockVector v = fock_janus(st);
            CHECK(std::abs(v.norm_squared() - 1.0) < 1e-10);
            for (int n = 1; n <= v.cutoff; n += 2) {
                CHECK(v[n] == cplx(0.0));
            }
        }
    }
}

TEST_CASE("sandwiches", "[oracle]") {
    const SqueezeParams xi(0.6, 0.3);
    const SqueezeParams zeta(0.4, -0.2);
    const FockVector vx = fock_squeezed(xi);
    const FockVector vz = fock_squeezed(zeta, vx.cutoff);
    CHECK(close_rel(oracle_sandwich(vz, vx, 0, 0), overlap(xi, zeta), 1e-12));
    CHECK(close_rel(oracle_sandwich(vz, vx, 0, 2), cross_even_moment(xi, zeta, 1), 1e-10));
    CHECK(close_rel(oracle_sandwich(vz, vx, 0, 4), cross_even_moment(xi, zeta, 2), 1e-9));
    CHECK(close_rel(oracle_sandwich(vz, vx, 1, 1), cross_factorial_moment(xi, zeta, 1), 1e-10));
    CHECK(close_rel(oracle_sandwich(vz, vx, 2, 2), cross_factorial_moment(xi, zeta, 2), 1e-10));
    // Hermitian conjugate pairs.
    CHECK(close_rel(oracle_sandwich(vx, vz, 2, 0), std::conj(oracle_sandwich(vz, vx, 0, 2)), 1e-13));
    CHECK_THROWS_AS(oracle_sandwich(vz, vx, -1, 0), DomainError);
}

TEST_CASE("oracle moments", "[oracle]") {
    const MomentSet vac = oracle_moments(fock_squeezed(SqueezeParams{}));
    CHECK(vac.N1 == 0.0);
    CHECK(vac.N2 == 0.0);
    CHECK(vac.M2 == cplx(0.0));
    CHECK(vac.M4 == cplx(0.0));
    const MomentSet one = oracle_moments(fock_squeezed(SqueezeParams(1.0, 0.0)));
    CHECK(close_rel(one.nbar, std::sinh(1.0) * std::sinh(1.0), 1e-10));
}

TEST_CASE("partial overlap sums converge at the rate set by |z|", "[oracle]") {
    const SqueezeParams xi(0.9, 0.4);
    const SqueezeParams zeta(0.8, -0.5);
    const FockVector vx = fock_squeezed(xi);
    const FockVector vz = fock_squeezed(zeta, vx.cutoff);
    const cplx exact = overlap(xi, zeta);
    const double z = xi.tanh_r() * zeta.tanh_r();
    cplx partial = 0.0;
    for (int n = 0; n <= 80; n += 2) {
        partial += std::conj(vz[n]) * vx[n];
        const int terms = n / 2 + 1;
        // Term magnitudes are bounded by c |z|^m, so the remainder is below
        // c |z|^terms / (1 - |z|).
        const double bound = std::pow(z, terms) / (1.0 - z);
        CHECK(std::abs(partial - exact) <= bound);
    }
}

TEST_CASE("displacement", "[oracle]") {
    SECTION("zero displacement is the identity") {
        const FockVector v = fock_squeezed(SqueezeParams(0.5, 0.0));
        const FockVector w = oracle_displace(v, 0.0);
        CHECK(w.amplitudes == v.amplitudes);
    }
    SECTION("squeezed vacuum r = 0.5, alpha0 = 1") {
        const FockVector v = fock_squeezed(SqueezeParams(0.5, 0.0));
        const FockVector w = oracle_displace(v, 1.0);
        const MomentSet ms = oracle_moments(w);
        CHECK(close_rel(ms.mean_a, cplx(1.0), 1e-9));
        CHECK(close_rel(ms.nbar, std::sinh(0.5) * std::sinh(0.5), 1e-9));
        CHECK(std::abs(w.norm_squared() - 1.0) < 1e-10);
    }
    SECTION("Janus state covariance is unchanged") {
        const JanusState st = from_ratio(SqueezeParams(0.7, 0.3), SqueezeParams(0.5, 2.0), -0.6);
        const cplx a0(0.7, -0.3);
        const CovarianceSummary before = covariance(moment_set(st));
        const CovarianceSummary after = covariance(oracle_moments(oracle_displace(fock_janus(st), a0)));
        CHECK(close_rel(after.VQQ, before.VQQ, 1e-8));
        CHECK(close_rel(after.VPP, before.VPP, 1e-8));
        CHECK(std::abs(after.VQP - before.VQP) < 1e-8);
        CHECK(close_rel(after.Vmin, before.Vmin, 1e-8));
        CHECK(close_rel(after.Vmax, before.Vmax, 1e-8));
    }
    SECTION("the cap bounds the working space") {
        OracleConfig cfg;
        cfg.max_cutoff = 100;
        CHECK_THROWS_AS(oracle_displace(fock_squeezed(SqueezeParams(0.3, 0.0)), 9.0, cfg), CutoffError);
    }
}

TEST_CASE("verification harness", "[oracle][verify]") {
    VerifyOptions opt;
    opt.samples = 50;
    opt.seed = 9;
    const VerifyReport a = run_verification(opt);
    CHECK(a.ok());
    CHECK(a.max_cutoff > 0);
    const VerifyReport b = run_verification(opt);
    CHECK(a.summary() == b.summary());
    for (const SuiteResult &s : a.suites) {
        CHECK(s.checks > 0);
    }
    CHECK_THROWS_AS(run_verification(VerifyOptions{1, 0, 1.5, OracleConfig{}}), DomainError);
}

TEST_CASE("verification at a larger squeeze cap", "[oracle][verify]") {
    VerifyOptions opt;
    opt.samples = 20;
    opt.r_max = 2.5;
    const VerifyReport rep = run_verification(opt);
    CHECK(rep.ok());
    CHECK(rep.max_cutoff > 512);
}

TEST_CASE("rounding floor of high-order sandwiches", "[oracle][verify]") {
    // Double-precision sums for a^8 at r ~ 2.3 cancel over terms of size ~1e7,
    // leaving errors near 1e-7 that the closed form does not share.
    const SqueezeParams xi(2.3308414987751318, 4.917226218608068);
    const SqueezeParams zeta(2.1190664635503587, 2.1389877457283042);
    const FockVector vx = fock_squeezed(xi, 4000);
    const FockVector vz = fock_squeezed(zeta, 4000);
    const cplx got = oracle_sandwich(vz, vx, 0, 8);
    // High-precision reference
    const cplx want(-0.0510282232225565, 1.09996630666393);
    CHECK(close_rel(cross_even_moment(xi, zeta, 4), want, 1e-13));
    const double mag = oracle_sandwich_magnitude(vz, vx, 0, 8);
    CHECK(mag >= std::abs(got));
    CHECK(std::abs(got - want) > 1e-8 * std::abs(want));
    CHECK(std::abs(got - want) < 4.0 * std::sqrt(4000.0) * kEps * mag);

    VerifyOptions opt;
    opt.samples = 100;
    opt.r_max = 2.5;
    opt.rounding_floor = false;
    CHECK_FALSE(run_verification(opt).ok());
    opt.rounding_floor = true;
    CHECK(run_verification(opt).ok());
}
