#include <doctest.h>

#include <cmath>
#include <random>

#include "hyperres/errors.hpp"
#include "hyperres/mode_solver.hpp"
#include "hyperres/special_functions.hpp"
#include "oracle_values.hpp"
#include "test_util.hpp"

using namespace hyperres;
using testutil::log_rel;

TEST_CASE("multiplicities") {
    CHECK(multiplicity(1, 0) == 1);
    for (int l = 1; l < 10; ++l) CHECK(multiplicity(1, l) == 2);
    for (int l = 0; l < 10; ++l) CHECK(multiplicity(2, l) == 2 * l + 1);
    CHECK(multiplicity(3, 2) == 9);
    ModeIndex m = mode_index(2, 3);
    CHECK(m.k == 3.5);
    CHECK(m.mu == 7);
}

TEST_CASE("step coefficient agrees with the mpmath oracle") {
    for (const auto& row : oracle::kStep) {
        CAPTURE(row.n);
        CAPTURE(row.l);
        CAPTURE(row.s);
        Potential pot = Potential::step(row.n, row.c, 1.0);
        CHECK(log_rel(f_coefficient(pot, row.l, row.s).reduced.log(), row.logG) < 1e-9);
        // the tiny-step row is ill-conditioned for both Wronskian routes
        if (std::abs(row.c) < 0.1) continue;
        Coefficient c = f_coefficient(pot, row.l, row.s, {FMethod::ClosedForm});
        CHECK(log_rel(c.reduced.log(), row.logG) < 1e-9);
        Coefficient o = f_coefficient(pot, row.l, row.s, {FMethod::Ode});
        CHECK(log_rel(o.reduced.log(), row.logG) < 1e-8);
    }
}

TEST_CASE("zero step reproduces the free coefficient 1/Gamma(l+s)") {
    Potential pot = Potential::step(2, 0.0, 1.0);
    for (int l : {0, 2, 9})
        for (cplx s : {cplx(-3.3, 1.2), cplx(0.7, -6.0), cplx(2.1, 15.0)}) {
            Coefficient a = f_coefficient(pot, l, s, {FMethod::ClosedForm});
            Coefficient b = f0_coefficient(2, l, s);
            CHECK(testutil::rel(a.reduced, b.reduced) < 1e-10);
        }
    CHECK(f0_zeros(1, 2, 9.0) == std::vector<double>{-2, -3, -4, -5, -6, -7, -8, -9});
}

TEST_CASE("Volterra series matches the closed form and its ratios decay like 1/k") {
    Potential pot = Potential::step(1, 1.0, 1.0);
    const cplx s(-2.0, 3.0);
    std::vector<double> lk, lr;
    for (int l : {5, 10, 20, 40, 80}) {
        VolterraResult v = volterra_coefficients(pot, l, s, 40);
        Coefficient c = f_coefficient(pot, l, s, {FMethod::ClosedForm});
        CHECK(testutil::rel(v.sum.reduced, c.reduced) < 1e-9);
        lk.push_back(std::log(double(l)));
        lr.push_back(std::log(std::abs(v.ratios[1])));
    }
    // least-squares slope of log|F_1/F_0| against log k
    double mx = 0, my = 0;
    for (size_t i = 0; i < lk.size(); ++i) mx += lk[i], my += lr[i];
    mx /= lk.size();
    my /= lk.size();
    double num = 0, den = 0;
    for (size_t i = 0; i < lk.size(); ++i) num += (lk[i] - mx) * (lr[i] - my), den += (lk[i] - mx) * (lk[i] - mx);
    CHECK(num / den == doctest::Approx(-1.0).epsilon(0.1));
}

TEST_CASE("ODE path handles non-step profiles") {
    Potential pw = Potential::power(2, cplx(2.0, 0.5), 1.0, 1.0);
    for (int l : {0, 3, 20})
        for (cplx s : {cplx(-1.3, 2.0), cplx(-8.0, 10.0)}) {
            VolterraResult v = volterra_coefficients(pw, l, s, 60);
            Coefficient c = f_coefficient(pw, l, s);
            CHECK(testutil::rel(v.sum.reduced, c.reduced) < 1e-8);
        }
    // sampled copy of a step equals the step inside the sampled grid
    std::vector<double> r = {0.0, 0.5, 1.0};
    std::vector<cplx> v = {1.0, 1.0, 1.0};
    Potential sp = Potential::sampled(1, r, v, 1.0, 1.0);
    Potential st = Potential::step(1, 1.0, 1.0);
    Coefficient a = f_coefficient(sp, 2, cplx(-1.5, 4.0));
    Coefficient b = f_coefficient(st, 2, cplx(-1.5, 4.0));
    CHECK(testutil::rel(a.reduced, b.reduced) < 1e-8);
}

TEST_CASE("functional equation with independent evaluation paths") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int n : {1, 2}) {
        Potential pot = Potential::step(n, 1.0, 1.0);
        for (int i = 0; i < 20; ++i) {
            int l = rng() % 20;
            cplx s(0.5 * n + 15.0 * U(rng), 15.0 * U(rng));
            Scaled a = lambda_mode(pot, l, s, 1e-9, {FMethod::ClosedForm});
            Scaled b = lambda_mode(pot, l, double(n) - s, 1e-9, {FMethod::Ode});
            CHECK(std::abs((a * b).value() - 1.0) < 1e-8);
        }
    }
}

TEST_CASE("real potentials give conjugation-symmetric coefficients") {
    Potential pot = Potential::step(2, 1.0, 1.0);
    for (cplx s : {cplx(-4.0, 7.0), cplx(0.2, -13.5)}) {
        Coefficient a = f_coefficient(pot, 3, s);
        Coefficient b = f_coefficient(pot, 3, std::conj(s));
        CHECK(std::abs(a.reduced.value() - std::conj(b.reduced.value())) <
              1e-10 * std::abs(a.reduced.value()));
    }
}

TEST_CASE("lambda_mode refuses points on the lattice") {
    Potential pot = Potential::step(1, 1.0, 1.0);
    CHECK_THROWS_AS(lambda_mode(pot, 3, cplx(20.5, 0.0)), LatticeSingularity);
    CHECK_NOTHROW(lambda_mode(pot, 3, cplx(20.73, 0.0)));
}

TEST_CASE("log tau: zero for V = 0, symmetric under s -> n - s up to sign") {
    Potential zero = Potential::step(1, 0.0, 1.0);
    CHECK(log_tau(zero, cplx(0.5, 10.23)).value == doctest::Approx(0.0));
    Potential pot = Potential::step(1, 1.0, 1.0);
    cplx s(0.5 + 6.23, 3.0);
    double a = log_tau(pot, s).value;
    double b = log_tau(pot, 1.0 - s).value;
    CHECK(a == doctest::Approx(-b).epsilon(1e-8));
    CHECK(log_tau(pot, s, 1e-10, false).value == doctest::Approx(a).epsilon(1e-12));
}

TEST_CASE("potential descriptors") {
    Potential p = Potential::step(2, cplx(0.0, 1.0), 1.0);
    CHECK_FALSE(p.is_real());
    CHECK_FALSE(p.is_zero());
    CHECK(p(0.5) == cplx(0.0, 1.0));
    CHECK(p(1.5) == cplx(0.0, 0.0));
    Potential q = Potential::power(1, 2.0, 2.0, 1.0);
    CHECK(q.sigma == 3.0);
    CHECK(q(0.5) == cplx(0.5, 0.0));
}
