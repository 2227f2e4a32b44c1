#include "hyperres/counting.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <json.hpp>

#include "hyperres/errors.hpp"
#include "hyperres/phase_geometry.hpp"

namespace hyperres {

namespace {

constexpr double kPi = std::numbers::pi;

struct Point {
    double rho;
    double arg;  // in [0, 2pi)
    long long mult;
};

std::vector<Point> points_of(const ResonanceSet& set) {
    std::vector<Point> pts;
    const double c = 0.5 * set.n;
    auto add = [&](const Resonance& r) {
        cplx d = r.zeta - c;
        double a = std::atan2(d.imag(), d.real());
        if (a < 0.0) a += 2.0 * kPi;
        pts.push_back({std::abs(d), a, r.total_multiplicity});
    };
    for (const auto& r : set.resonances) add(r);
    for (const auto& r : set.eigen_side) add(r);
    return pts;
}

void require_covered(const ResonanceSet& set, double t) {
    if (t > set.t_max * (1.0 + 1e-12)) {
        std::ostringstream os;
        os << "t=" << t << " beyond computed radius " << set.t_max;
        throw InsufficientData(os.str());
    }
}

bool in_sector(double arg, double th1, double th2) {
    const bool closed_left = std::abs(th1 - 0.5 * kPi) < 1e-15;
    bool left_ok = closed_left ? arg >= th1 : arg > th1;
    return left_ok && arg <= th2;
}

}  // namespace

long long background_multiplicity(int n, int k) {
    if (n % 2 == 0) return 0;
    // (2k+1)(k+1)...(k+n-1)/n!
    long double num = 2.0L * k + 1.0L;
    for (int j = 1; j <= n - 1; ++j) num *= (k + j);
    long double fact = 1.0L;
    for (int j = 2; j <= n; ++j) fact *= j;
    return static_cast<long long>(std::llround(num / fact));
}

std::vector<BackgroundPoint> background_set(int n, double t_max) {
    std::vector<BackgroundPoint> out;
    if (n % 2 == 0) return out;
    for (int k = 0; k + 0.5 * n <= t_max; ++k) out.push_back({k, background_multiplicity(n, k)});
    return out;
}

long long background_count(int n, double t) {
    long long N = 0;
    for (const auto& p : background_set(n, t)) N += p.mult;
    return N;
}

double background_constant(int n) { return n % 2 == 1 ? 2.0 / std::tgamma(n + 2.0) : 0.0; }

CountValue counting_function(const ResonanceSet& set, double t) {
    require_covered(set, t);
    CountValue v;
    for (const auto& p : points_of(set)) {
        if (p.rho > t) continue;
        v.N += p.mult;
        if (p.rho > 0.0) v.N_tilde += double(p.mult) * std::log(t / p.rho);
    }
    v.N_tilde *= (set.n + 1);
    return v;
}

std::vector<CountingRow> counting_table(const ResonanceSet& set, const std::vector<double>& t_grid,
                                        double An) {
    std::vector<CountingRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        CountValue v = counting_function(set, t);
        rows.push_back({t, v.N, background_count(set.n, t), v.N_tilde, An * std::pow(t, set.n + 1)});
    }
    return rows;
}

void write_counting_csv(const std::vector<CountingRow>& rows, std::ostream& os) {
    os << "t,N,N0,N_tilde,weyl_pred\n" << std::setprecision(17);
    for (const auto& r : rows)
        os << r.t << ',' << r.N << ',' << r.N0 << ',' << r.N_tilde << ',' << r.weyl_pred << '\n';
}

SectorCount sector_count(const ResonanceSet& set, double t, double theta1, double theta2) {
    require_covered(set, t);
    if (!(theta1 >= 0.5 * kPi - 1e-15 && theta1 < theta2 && theta2 <= 1.5 * kPi + 1e-15))
        throw Error("counting", "sector angles must satisfy pi/2 <= theta1 < theta2 <= 3pi/2");
    SectorCount c;
    for (const auto& p : points_of(set)) {
        if (p.rho <= 0.0 || p.rho > t) continue;
        if (!in_sector(p.arg, theta1, theta2)) continue;
        c.count += p.mult;
        c.averaged += double(p.mult) * std::log(t / p.rho);
    }
    c.averaged *= (set.n + 1);
    return c;
}

double indicator_derivative(double theta, double r0, int n) {
    const double h = 1e-4;
    return (indicator(theta + h, r0, n) - indicator(theta - h, r0, n)) / (2.0 * h);
}

double sector_prediction(int n, double r0, double theta1, double theta2, double t) {
    if (!(theta1 >= 0.5 * kPi - 1e-15 && theta1 < theta2 && theta2 <= 1.5 * kPi + 1e-15))
        throw Error("counting", "sector angles must satisfy pi/2 <= theta1 < theta2 <= 3pi/2");
    for (double th : {theta1, theta2}) {
        if (std::abs(th - kPi) < 1e-9) {
            std::ostringstream os;
            os << "theta=" << th;
            throw NonDifferentiableAngle(os.str());
        }
    }
    double N0 = 0.0;
    if (n % 2 == 1 && theta1 < kPi && kPi < theta2) N0 = double(background_count(n, t));
    auto h = [&](double w) { return indicator(w, r0, n); };
    double lo = theta1 - kPi, hi = theta2 - kPi;
    double I = 0.0;
    // h has a corner at 0
    if (lo < 0.0 && hi > 0.0) {
        I = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(h, lo, 0.0, 8, 1e-11) +
            boost::math::quadrature::gauss_kronrod<double, 31>::integrate(h, 0.0, hi, 8, 1e-11);
    } else {
        I = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(h, lo, hi, 8, 1e-11);
    }
    const double tp = std::pow(t, n + 1);
    double pred = N0 + (n + 1) * tp / (2.0 * kPi) * I;
    const double edge = tp / (2.0 * kPi * (n + 1));
    if (theta2 < 1.5 * kPi - 1e-15) pred += edge * indicator_derivative(hi, r0, n);
    if (theta1 > 0.5 * kPi + 1e-15) pred -= edge * indicator_derivative(lo, r0, n);
    return pred;
}

SectorReport sector_report(const ResonanceSet& set, double r0, double theta1, double theta2, double t) {
    SectorReport r;
    r.theta1 = theta1;
    r.theta2 = theta2;
    r.measured = double(sector_count(set, t, theta1, theta2).count);
    r.predicted = sector_prediction(set.n, r0, theta1, theta2, t);
    r.ratio = r.measured / r.predicted;
    return r;
}

void write_sector_json(const SectorReport& r, std::ostream& os) {
    nlohmann::json j = {{"theta1", r.theta1},
                        {"theta2", r.theta2},
                        {"measured", r.measured},
                        {"predicted", r.predicted},
                        {"ratio", r.ratio}};
    os << std::setprecision(17) << j.dump(2) << '\n';
}

double contour_radius(double a) { return std::floor(2.0 * a) / 2.0 + 0.23; }

ContourCheck contour_check(const Potential& pot, const ResonanceSet& set, double a, bool parallel) {
    ContourCheck out;
    out.a = contour_radius(a);
    require_covered(set, out.a);
    const int n = pot.n;
    out.lhs = counting_function(set, out.a).N_tilde;

    using GK = boost::math::quadrature::gauss_kronrod<double, 61>;
    const auto& x = GK::abscissa();
    const auto& w = GK::weights();
    // symmetric rule: abscissa()[0] = 0 and the rest come in +- pairs
    std::vector<double> nodes, weights;
    for (size_t i = 0; i < x.size(); ++i) {
        nodes.push_back(x[i]);
        weights.push_back(w[i]);
        if (x[i] != 0.0) {
            nodes.push_back(-x[i]);
            weights.push_back(w[i]);
        }
    }
    const double half = 0.5 * kPi;
    const double cut = half - 0.02;
    std::vector<double> thetas;
    for (double xi : nodes) thetas.push_back(half * xi);
    // two extra interior samples per side for extrapolation
    const std::vector<double> extra = {cut, cut - 0.02, -cut, -(cut - 0.02)};
    std::vector<double> all = thetas;
    for (double e : extra) all.push_back(e);
    std::vector<double> vals(all.size(), 0.0);
    std::vector<char> skip(all.size(), 0);
    for (size_t i = 0; i < thetas.size(); ++i)
        if (std::abs(thetas[i]) > cut) skip[i] = 1;
    std::vector<std::exception_ptr> errs(all.size());
    const int m = static_cast<int>(all.size());
    auto eval = [&](int i) {
        if (skip[i]) return;
        try {
            cplx s = 0.5 * n + out.a * std::polar(1.0, all[i]);
            vals[i] = log_tau(pot, s, 1e-10, false).value;
        } catch (...) {
            errs[i] = std::current_exception();
        }
    };
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < m; ++i) eval(i);
    } else {
        for (int i = 0; i < m; ++i) eval(i);
    }
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
    const size_t base = thetas.size();
    auto extrapolate = [&](double th) {
        // linear through the two samples on the same side
        double t1 = th > 0 ? all[base] : all[base + 2];
        double t2 = th > 0 ? all[base + 1] : all[base + 3];
        double v1 = th > 0 ? vals[base] : vals[base + 2];
        double v2 = th > 0 ? vals[base + 1] : vals[base + 3];
        return v1 + (v1 - v2) / (t1 - t2) * (th - t1);
    };
    double I = 0.0;
    for (size_t i = 0; i < base; ++i) {
        double v = vals[i];
        if (skip[i]) {
            v = extrapolate(thetas[i]);
            out.extrapolated = true;
        }
        I += weights[i] * half * v;
    }
    out.boundary_integral = I;
    out.rhs = background_constant(n) * std::pow(out.a, n + 1) + (n + 1) / (2.0 * kPi) * I;
    return out;
}

WeylReport weyl_report(const ResonanceSet& set, int n, double r0) {
    if (set.t_max < 20.0) throw InsufficientData("weyl fit needs t_max >= 20");
    WeylReport r;
    r.An = weyl_constant(n, r0).An;
    const int pts = 201;
    double num = 0.0, den = 0.0, numt = 0.0;
    for (int i = 0; i < pts; ++i) {
        double t = 0.5 * set.t_max * (1.0 + double(i) / (pts - 1));
        CountValue v = counting_function(set, t);
        double tp = std::pow(t, n + 1);
        num += double(v.N) * tp;
        numt += v.N_tilde * tp;
        den += tp * tp;
    }
    r.C_hat = num / den;
    r.C_tilde = numt / den;
    r.ratio = r.C_hat / r.An;
    for (int i = 1; i <= 200; ++i) {
        double t = set.t_max * i / 200.0;
        r.t.push_back(t);
        r.pointwise.push_back(double(counting_function(set, t).N) / (r.An * std::pow(t, n + 1)));
    }
    return r;
}

}  // namespace hyperres
