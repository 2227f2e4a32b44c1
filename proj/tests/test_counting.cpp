#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperres/counting.hpp"
#include "hyperres/errors.hpp"
#include "hyperres/phase_geometry.hpp"

using namespace hyperres;
constexpr double kPi = std::numbers::pi;

namespace {

ResonanceSet synthetic(int n) {
    ResonanceSet s;
    s.n = n;
    s.t_max = 10.0;
    auto add = [&](cplx z, long long m) {
        Resonance r;
        r.zeta = z;
        r.total_multiplicity = m;
        s.resonances.push_back(r);
    };
    const double c = 0.5 * n;
    add(c + cplx(-1.0, 0.0), 1);         // on the ray pi
    add(c + cplx(-2.0, 2.0), 3);         // 3pi/4
    add(c + cplx(-2.0, -2.0), 3);        // 5pi/4
    add(c + cplx(0.0, 4.0), 2);          // pi/2
    add(c + cplx(0.0, -5.0), 2);         // 3pi/2
    add(c + std::polar(7.0, 2.0), 5);
    return s;
}

}  // namespace

TEST_CASE("background multiplicities") {
    for (int k = 0; k < 12; ++k) CHECK(background_multiplicity(1, k) == 2 * k + 1);
    CHECK(background_multiplicity(3, 2) == 10);
    CHECK(background_multiplicity(2, 3) == 0);
    CHECK(background_set(2, 30.0).empty());
    CHECK(background_count(1, 10.5) == 121);  // sum_{k<=10} (2k+1)
    CHECK(background_constant(1) == doctest::Approx(1.0));
    CHECK(background_constant(4) == 0.0);
}

TEST_CASE("counting function and its exact log integral") {
    ResonanceSet s = synthetic(2);
    CHECK(counting_function(s, 0.5).N == 0);
    CHECK(counting_function(s, 3.0).N == 7);
    CHECK(counting_function(s, 10.0).N == 16);
    // (n+1) int_0^t N(u)/u du against a midpoint sum
    const double t = 8.0;
    double num = 0.0;
    const int m = 200000;
    for (int i = 0; i < m; ++i) {
        double u = t * (i + 0.5) / m;
        num += double(counting_function(s, u).N) / u * (t / m);
    }
    CHECK(counting_function(s, t).N_tilde == doctest::Approx(3.0 * num).epsilon(1e-4));
    CHECK_THROWS_AS(counting_function(s, 10.5), InsufficientData);
}

TEST_CASE("sector counts are additive across the left half-plane") {
    ResonanceSet s = synthetic(2);
    const double t = 10.0;
    long long total = sector_count(s, t, 0.5 * kPi, 1.5 * kPi).count;
    CHECK(total == counting_function(s, t).N);
    for (double th : {0.75 * kPi, kPi, 1.2 * kPi}) {
        long long a = sector_count(s, t, 0.5 * kPi, th).count;
        long long b = sector_count(s, t, th, 1.5 * kPi).count;
        CHECK(a + b == total);
    }
    // the ray pi goes to the left interval
    CHECK(sector_count(s, t, 0.5 * kPi, kPi).count == 1 + 3 + 2 + 5);
    CHECK_THROWS_AS(sector_count(s, t, 0.2, 1.0), Error);
}

TEST_CASE("sector prediction is additive and matches the Weyl constant") {
    const int n = 2;
    const double t = 30.0;
    double full = sector_prediction(n, 1.0, 0.5 * kPi, 1.5 * kPi, t);
    CHECK(full == doctest::Approx(weyl_constant(n, 1.0).An * std::pow(t, n + 1)).epsilon(1e-8));
    for (double th : {0.6 * kPi, 0.8 * kPi, 1.3 * kPi}) {
        double a = sector_prediction(n, 1.0, 0.5 * kPi, th, t);
        double b = sector_prediction(n, 1.0, th, 1.5 * kPi, t);
        CHECK(a + b == doctest::Approx(full).epsilon(1e-8));
    }
    CHECK_THROWS_AS(sector_prediction(n, 1.0, 0.5 * kPi, kPi, t), NonDifferentiableAngle);
}

TEST_CASE("edge term: h'(-pi/2+) from the difference quotient") {
    for (int n : {1, 2, 3}) {
        double e = 1e-3;
        double fd = (indicator(-0.5 * kPi + 2 * e, 1.0, n) - indicator(-0.5 * kPi + e, 1.0, n)) / e;
        CHECK(indicator_edge_derivative(n, 1.0) == doctest::Approx(fd).epsilon(5e-3));
    }
}

TEST_CASE("contour radius stays 0.23 off the half-integers") {
    CHECK(contour_radius(30.0) == doctest::Approx(30.23));
    CHECK(contour_radius(15.4) == doctest::Approx(15.23));
    CHECK(contour_radius(15.6) == doctest::Approx(15.73));
}

TEST_CASE("counting CSV and weyl preconditions") {
    ResonanceSet s = synthetic(2);
    std::ostringstream os;
    write_counting_csv(counting_table(s, {1.0, 5.0, 10.0}, 1.5), os);
    CHECK(os.str().rfind("t,N,N0,N_tilde,weyl_pred\n", 0) == 0);
    CHECK_THROWS_AS(weyl_report(s, 2, 1.0), InsufficientData);
}

TEST_CASE("contour identity on a small disk") {
    Potential pot = Potential::step(1, 1.0, 1.0);
    ResonanceSet set = all_resonances(pot, 8.5);
    ContourCheck c = contour_check(pot, set, 8.0);
    CHECK(c.a == doctest::Approx(8.23));
    CHECK(c.extrapolated);
    CHECK(std::abs(c.lhs - c.rhs) / std::pow(c.a, 2) < 0.05);
    ContourCheck serial = contour_check(pot, set, 8.0, false);
    CHECK(serial.rhs == doctest::Approx(c.rhs).epsilon(1e-12));
}
