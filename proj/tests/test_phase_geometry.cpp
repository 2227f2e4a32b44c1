#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hyperres/errors.hpp"
#include "hyperres/phase_geometry.hpp"
#include "oracle_values.hpp"

using namespace hyperres;
constexpr double kPi = std::numbers::pi;

TEST_CASE("H agrees with the mpmath oracle") {
    for (const auto& row : oracle::kH) {
        CAPTURE(row.alpha);
        CHECK(exponent_H(row.alpha, row.r) == doctest::Approx(row.H).epsilon(1e-12));
    }
}

TEST_CASE("H via phi and p equals the direct formula") {
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
        cplx a(3.0 * U(rng), 3.0 * U(rng));
        if (std::abs(a - 1.0) < 1e-3 || std::abs(a + 1.0) < 1e-3 || a.real() == 0.0) continue;
        double r = 0.1 + 2.0 * std::abs(U(rng));
        worst = std::max(worst, std::abs(exponent_H(a, r) - exponent_H_via_phase(a, r)));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("Re phi increases in r and dH/dr matches a finite difference") {
    for (cplx a : {cplx(0.5, 0.2), cplx(1.7, -0.9), cplx(0.1, 2.0)}) {
        double prev = -INFINITY;
        for (double r = 0.2; r < 3.0; r += 0.2) {
            double v = phase(a, r).phi.real();
            CHECK(v > prev);
            prev = v;
        }
        const double h = 1e-5;
        double fd = (exponent_H(a, 1.0 + h) - exponent_H(a, 1.0 - h)) / (2.0 * h);
        CHECK(exponent_H_dr(a, 1.0) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("rho curve values") {
    CHECK(rho_curve(0.5 * kPi, 1.0) == doctest::Approx(1.0 / std::sinh(1.0)).epsilon(1e-10));
    for (const auto& row : oracle::kRho) {
        CAPTURE(row.theta);
        CHECK(rho_curve(row.theta, row.r0) == doctest::Approx(row.rho).epsilon(1e-10));
    }
    // even in theta
    CHECK(rho_curve(0.4, 1.0) == doctest::Approx(rho_curve(-0.4, 1.0)).epsilon(1e-12));
}

TEST_CASE("indicator and Weyl constants agree with the oracle") {
    for (const auto& row : oracle::kWeyl) {
        CAPTURE(row.n);
        CHECK(indicator(0.0, 1.0, row.n) == doctest::Approx(row.h0).epsilon(1e-8));
        WeylConstants w = weyl_constant(row.n, 1.0);
        CHECK(w.An == doctest::Approx(row.An).epsilon(1e-8));
        // oracle edge value is a Richardson-extrapolated one-sided difference
        CHECK(indicator_edge_derivative(row.n, 1.0) == doctest::Approx(row.edge).epsilon(1e-4));
    }
    CHECK(weyl_constant(2, 1.0).A0 == 0.0);
    CHECK(weyl_constant(3, 1.0).A0 == doctest::Approx(2.0 / 24.0));
}

TEST_CASE("indicator is even, vanishes at the edges and is positive inside") {
    for (double th : {0.3, 0.9, 1.4}) CHECK(indicator(th, 1.0, 2) == doctest::Approx(indicator(-th, 1.0, 2)).epsilon(1e-9));
    CHECK(indicator(0.5 * kPi, 1.0, 1) == 0.0);
    CHECK(indicator(0.2, 1.0, 1) > 0.0);
}

TEST_CASE("branch points are rejected") {
    CHECK_THROWS_AS(phase(cplx(1.0, 0.0), 1.0), BranchPoint);
    CHECK_THROWS_AS(exponent_H(cplx(-1.0, 0.0), 1.0), BranchPoint);
}

TEST_CASE("indicator table: serial and parallel agree, CSV header") {
    IndicatorTable a = indicator_table(1.0, 1, 19, false);
    IndicatorTable b = indicator_table(1.0, 1, 19, true);
    for (size_t i = 0; i < a.h_values.size(); ++i) CHECK(a.h_values[i] == b.h_values[i]);
    std::ostringstream os;
    write_indicator_csv(a, os);
    CHECK(os.str().rfind("theta,h,rho\n", 0) == 0);
}
