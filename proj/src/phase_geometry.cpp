#include "hyperres/phase_geometry.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hyperres/errors.hpp"

namespace hyperres {

namespace {

constexpr double kPi = std::numbers::pi;

void guard_branch(cplx alpha) {
    if (std::abs(alpha - 1.0) < 1e-14 || std::abs(alpha + 1.0) < 1e-14) {
        std::ostringstream os;
        os << "alpha=" << alpha;
        throw BranchPoint(os.str());
    }
}

// H on the imaginary axis, written without the cancelling +-pi|y| terms
double exponent_H_imaginary(double y, double r) {
    y = std::abs(y);
    const double c = std::cosh(r);
    const double s = std::sinh(r);
    const double d = 1.0 - y * y * s * s;
    if (d <= 0.0) return 0.0;
    const double T = std::sqrt(d);
    if (y == 0.0) return -2.0 * std::atanh(T / c);
    return 2.0 * y * std::atan(T / (y * c)) - 2.0 * std::atanh(T / c);
}

}  // namespace

PhaseValues phase(cplx alpha, double r) {
    guard_branch(alpha);
    const double c = std::cosh(r), s = std::sinh(r);
    const cplx S = std::sqrt(1.0 + alpha * alpha * s * s);
    PhaseValues v;
    v.phi = alpha * std::log((alpha * c + S) / std::sqrt(alpha * alpha - 1.0)) +
            0.5 * std::log((c - S) / (c + S));
    v.phi_prime_r = S / s;
    v.p = 0.5 * alpha * std::log((alpha + 1.0) / (alpha - 1.0)) + 0.5 * std::log(1.0 - alpha * alpha);
    v.q = alpha * std::log(alpha / std::sqrt(alpha * alpha - 1.0)) +
          0.5 * std::log((1.0 - alpha) / (1.0 + alpha));
    v.zeta = std::pow(1.5 * v.phi, 2.0 / 3.0);
    return v;
}

double exponent_H(cplx alpha, double r) {
    guard_branch(alpha);
    if (alpha.real() == 0.0) return exponent_H_imaginary(alpha.imag(), r);
    const double c = std::cosh(r), s = std::sinh(r);
    const cplx S = std::sqrt(1.0 + alpha * alpha * s * s);
    const cplx t = 2.0 * alpha * std::log(alpha * c + S) - alpha * std::log(alpha * alpha - 1.0);
    return t.real() + std::log(std::abs((c - S) / (c + S)));
}

double exponent_H_via_phase(cplx alpha, double r) {
    PhaseValues v = phase(alpha, r);
    cplx t = 2.0 * v.phi - 2.0 * v.p + (alpha + 1.0) * std::log(alpha + 1.0) -
             (alpha - 1.0) * std::log(alpha - 1.0);
    return t.real();
}

double exponent_H_dr(cplx alpha, double r) {
    const double s = std::sinh(r);
    return 2.0 * (std::sqrt(1.0 + alpha * alpha * s * s) / s).real();
}

double rho_curve(double theta, double r0) {
    cplx dir = std::polar(1.0, theta);
    if (std::abs(std::abs(theta) - 0.5 * kPi) < 1e-12) dir = cplx(0.0, theta > 0 ? 1.0 : -1.0);
    auto f = [&](double x) { return exponent_H(x * dir, r0); };
    double lo = 1e-3 / std::sinh(r0), hi = 1e3;
    double flo = f(lo), fhi = f(hi);
    if (!(flo < 0.0) || !(fhi >= 0.0)) {
        std::ostringstream os;
        os << "theta=" << theta << " r0=" << r0 << " H(lo)=" << flo << " H(hi)=" << fhi;
        throw BracketFailure(os.str());
    }
    // smallest x with H >= 0; plain bisection also handles the H == 0 plateau on the axis
    for (int it = 0; it < 200 && hi - lo > 2e-16 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double indicator(double theta, double r0, int n) {
    if (std::abs(std::abs(theta) - 0.5 * kPi) < 1e-12) return 0.0;
    const double rho = rho_curve(theta, r0);
    const cplx dir = std::polar(1.0, theta);
    // x = rho/u maps [rho, inf) to (0, 1]
    auto g0 = [&](double u) {
        double x = rho / u;
        double H = exponent_H(x * dir, r0);
        if (H < 0.0) H = 0.0;
        return H * std::pow(u, n) * std::pow(rho, -n - 1);
    };
    // H is linear in x at large x; avoid overflow in alpha^2
    auto g = [&](double u) {
        if (u <= 0.0) return 0.0;
        if (u < 1e-30) return g0(1e-30) * std::pow(u / 1e-30, n - 1);
        return g0(u);
    };
    boost::math::quadrature::tanh_sinh<double> ts(12);
    double val = ts.integrate(g, 0.0, 1.0, 1e-12);
    return 2.0 / std::tgamma(double(n)) * val;
}

WeylConstants weyl_constant(int n, double r0) {
    WeylConstants w;
    w.A0 = 0.0;
    if (n % 2 == 1) w.A0 = 2.0 / std::tgamma(n + 2.0);
    auto h = [&](double th) { return indicator(th, r0, n); };
    double I = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(h, -0.5 * kPi, 0.5 * kPi,
                                                                            8, 1e-11);
    w.An = w.A0 + (n + 1.0) / (2.0 * kPi) * I;
    return w;
}

double indicator_edge_derivative(int n, double r0) {
    const double c = std::cosh(r0), s = std::sinh(r0);
    const double lo = 1.0 / s;
    // x = lo/u again
    auto g = [&](double u) {
        if (u <= 0.0) return 0.0;
        u = std::max(u, 1e-30);
        double x = lo / u;
        double arg = x * x * s * s - 1.0;
        if (arg < 0.0) arg = 0.0;
        double L = std::log((x * c + std::sqrt(arg)) / std::sqrt(x * x + 1.0));
        return L * std::pow(u, n - 1) * std::pow(lo, -n);
    };
    boost::math::quadrature::tanh_sinh<double> ts(12);
    double val = ts.integrate(g, 0.0, 1.0, 1e-13);
    return 4.0 / std::tgamma(double(n)) * val;
}

IndicatorTable indicator_table(double r0, int n, int points, bool parallel) {
    IndicatorTable t;
    t.r0 = r0;
    t.n = n;
    t.theta_grid.resize(points);
    t.h_values.resize(points);
    t.rho_values.resize(points);
    for (int i = 0; i < points; ++i)
        t.theta_grid[i] = -0.5 * kPi + kPi * i / double(points - 1);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < points; ++i) {
            t.rho_values[i] = rho_curve(t.theta_grid[i], r0);
            t.h_values[i] = indicator(t.theta_grid[i], r0, n);
        }
    } else {
        for (int i = 0; i < points; ++i) {
            t.rho_values[i] = rho_curve(t.theta_grid[i], r0);
            t.h_values[i] = indicator(t.theta_grid[i], r0, n);
        }
    }
    return t;
}

void write_indicator_csv(const IndicatorTable& t, std::ostream& os) {
    os << "theta,h,rho\n";
    os << std::setprecision(17);
    for (size_t i = 0; i < t.theta_grid.size(); ++i)
        os << t.theta_grid[i] << ',' << t.h_values[i] << ',' << t.rho_values[i] << '\n';
}

}  // namespace hyperres
