#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hyperres/errors.hpp"
#include "hyperres/special_functions.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace hyperres;
using testutil::log_rel;

TEST_CASE("log_gamma matches lgamma on the real axis and the reflection formula") {
    for (double x : {0.1, 0.5, 1.0, 3.7, 12.25, 150.5}) CHECK(log_gamma(x).real() == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-30.0, 30.0);
    for (int i = 0; i < 200; ++i) {
        cplx z(U(rng), U(rng));
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        cplx lhs = log_gamma(z) + log_gamma(1.0 - z) + log_sin_pi(z);
        CHECK(log_rel(lhs, std::log(std::numbers::pi)) < 1e-10);
    }
    CHECK_THROWS_AS(log_gamma(-3.0), GammaPole);
    CHECK(rgamma_scaled(-4.0).is_zero());
}

TEST_CASE("Legendre values agree with the mpmath oracle") {
    for (const auto& row : oracle::kLegendre) {
        CAPTURE(row.k);
        CAPTURE(row.nu);
        CAPTURE(row.r);
        LegendrePair p = legendre_pair(row.k, row.nu, row.r);
        CHECK(log_rel(p.p().log(), row.logP) < 1e-10);
        CHECK(testutil::rel(p.p_deriv_r / p.p_value, row.dlogP) < 1e-10);
        CHECK(log_rel(p.q().log(), row.logQ) < 1e-9);
        CHECK(testutil::rel(p.q_deriv_r / p.q_value, row.dlogQ) < 1e-9);
    }
}

TEST_CASE("Wronskian constant is fixed by the small-r limits") {
    // P ~ (r/2)^k / Gamma(k+1) and Q ~ Gamma(k) / (2 Gamma(k+nu+1)) (2/r)^k as r -> 0,
    // so Gamma(k+nu+1) sinh r W[P, Q] -> -2k (1/(2k)) = -1
    const double r = 1e-4;
    for (double k : {1.5, 2.0, 3.0, 7.5})
        for (cplx nu : {cplx(0.3, 0.0), cplx(2.0, 1.5), cplx(-0.2, -4.0)}) {
            LegendrePair p = legendre_pair(k, nu, r);
            cplx lp = k * std::log(0.5 * r) - std::lgamma(k + 1.0);
            cplx lq = std::lgamma(k) - std::log(2.0) - log_gamma(k + nu + 1.0) + k * std::log(2.0 / r);
            CHECK(log_rel(p.p().log(), lp) < 1e-6);
            CHECK(log_rel(p.q().log(), lq) < 1e-6);
            Scaled W = (p.p() * p.dq() - p.dp() * p.q()) * cplx(std::sinh(r), 0.0) *
                       Scaled::from_log(log_gamma(k + nu + 1.0));
            CHECK(std::abs(W.value() - kLegendreWronskian) < 1e-10);
        }
}

TEST_CASE("Wronskian times sinh r is constant along r") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int i = 0; i < 60; ++i) {
        double k = 0.5 * (rng() % 21);
        cplx nu(-0.5 + 12.0 * std::abs(U(rng)), 20.0 * U(rng));
        for (double r : {0.1, 0.5, 1.0, 2.0, 3.0}) {
            LegendrePair p = legendre_pair(k, nu, r);
            Scaled W = (p.p() * p.dq() - p.dp() * p.q()) * cplx(std::sinh(r), 0.0) *
                       Scaled::from_log(log_gamma(k + nu + 1.0));
            CHECK(std::abs(W.value() - kLegendreWronskian) < 1e-9);
        }
    }
}

TEST_CASE("Q reflection holds where both sides are computed directly") {
    // |Re nu + 1/2| <= 1/2: neither Q_nu nor Q_{-1-nu} is dominant enough to cancel
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    LegendreOptions raw;
    raw.reflect = false;
    for (int i = 0; i < 80; ++i) {
        double k = 0.5 * (rng() % 11);
        cplx nu(-0.5 + 0.5 * U(rng), 15.0 * U(rng));
        for (double r : {0.1, 0.5, 1.0, 2.0}) {
            LegendrePair a = legendre_pair(k, nu, r);
            LegendrePair b = legendre_pair(k, -1.0 - nu, r, raw);
            cplx lg = log_gamma(k + nu + 1.0);
            Scaled A = Scaled::from_log(lg + log_sin_pi(nu + 0.5));
            Scaled B = Scaled::from_log(lg) * rgamma_scaled(k - nu);
            Scaled rhs = A * a.p() + B * a.q();
            CHECK(testutil::rel(b.q(), rhs) < 1e-8);
        }
    }
}

TEST_CASE("Continuation and series strategies agree where both apply") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    LegendreOptions cont;
    cont.strategy = LegendreStrategy::Continuation;
    for (int i = 0; i < 40; ++i) {
        double k = 0.5 * (rng() % 41);
        cplx nu(-0.5 + 20.0 * std::abs(U(rng)), 25.0 * U(rng));
        double r = 0.4 + 1.5 * std::abs(U(rng));
        LegendrePair a = legendre_pair(k, nu, r);
        LegendrePair b = legendre_pair(k, nu, r, cont);
        CHECK(testutil::rel(a.p(), b.p()) < 1e-9);
        CHECK(testutil::rel(a.q(), b.q()) < 1e-9);
    }
}

TEST_CASE("legendre_sweep reproduces pointwise evaluation") {
    std::vector<double> rs = {0.2, 0.6, 1.0, 1.7, 2.5};
    for (cplx nu : {cplx(3.0, 4.0), cplx(-7.2, 1.0)}) {
        auto sweep = legendre_sweep(4.0, nu, rs);
        for (size_t i = 0; i < rs.size(); ++i) {
            LegendrePair p = legendre_pair(4.0, nu, rs[i]);
            CHECK(testutil::rel(sweep[i].p(), p.p()) < 1e-9);
            CHECK(testutil::rel(sweep[i].q(), p.q()) < 1e-9);
        }
    }
}

TEST_CASE("uniform and Bessel estimates bracket the computed values") {
    // leading order only: log-modulus within O(log k) of the estimate
    for (double k : {20.0, 40.0})
        for (cplx alpha : {cplx(0.7, 0.3), cplx(1.6, -0.4), cplx(0.2, 1.1)}) {
            cplx nu = alpha * k - 0.5;
            LegendreEstimate e = legendre_uniform_estimate(k, alpha, 1.0);
            LegendrePair p = legendre_pair(k, nu, 1.0);
            CHECK(std::abs(p.p().log_abs() - e.p.log_abs()) < 2.0 + std::log(k));
            CHECK(std::abs(p.q().log_abs() - e.q.log_abs()) < 2.0 + std::log(k));
        }
    for (cplx nu : {cplx(30.0, 5.0), cplx(10.0, -40.0)}) {
        LegendreEstimate e = legendre_bessel_estimate(2.0, nu, 0.5);
        LegendrePair p = legendre_pair(2.0, nu, 0.5);
        CHECK(std::abs(p.p().log_abs() - e.p.log_abs()) < 2.0);
        CHECK(std::abs(p.q().log_abs() - e.q.log_abs()) < 2.0);
    }
}

TEST_CASE("regime classification follows the thresholds") {
    CHECK(classify_regime(2.0, cplx(1.0, 1.0)) == LegendreRegime::Series);
    CHECK(classify_regime(30.0, cplx(40.0, 5.0)) == LegendreRegime::Uniform);
    CHECK(classify_regime(3.0, cplx(40.0, 10.0)) == LegendreRegime::Bessel);
}

TEST_CASE("out-of-domain radii are rejected") {
    CHECK_THROWS_AS(legendre_pair(1.0, cplx(0.5, 0.0), 0.0), PrecisionExhausted);
    CHECK_THROWS_AS(legendre_pair(1.0, cplx(0.5, 0.0), 9.0), PrecisionExhausted);
}

TEST_CASE("Airy and modified Bessel spot values") {
    // Ai(0) = 3^{-2/3}/Gamma(2/3), Ai(1) = 0.1352924163128814
    CHECK(std::abs(airy_ai(0.0) - 0.3550280538878172) < 1e-13);
    CHECK(std::abs(airy_ai(1.0) - 0.1352924163128814) < 1e-13);
    BesselIK b = bessel_modified(0.0, 1.0);
    CHECK(std::abs(b.I - 1.2660658777520082) < 1e-13);
    CHECK(std::abs(b.K - 0.42102443824070834) < 1e-13);
}
