#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperres/errors.hpp"
#include "hyperres/special_functions.hpp"
#include "ode_detail.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hyperres {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;

struct SeriesResult {
    cplx sum;
    double abs_sum;
};

// sum_m (z^2/4)^m / (m! Gamma(m+nu+1)), times (z/2)^nu taken by the caller
SeriesResult bessel_i_core(double nu, cplx z) {
    cplx q = 0.25 * z * z;
    // first nonzero term: for nu a negative integer the leading terms vanish
    int m0 = 0;
    if (nu < 0.0 && nu == std::round(nu)) m0 = static_cast<int>(-nu);
    Scaled t0 = rgamma_scaled(cplx(m0 + nu + 1.0, 0.0));
    // 1/m0!
    t0 = t0 * Scaled::from_log(-log_gamma(cplx(m0 + 1.0, 0.0)));
    cplx t = t0.value() * std::pow(q, m0);
    cplx s = t;
    double as = std::abs(t);
    for (int m = m0; m < 2000; ++m) {
        t *= q / ((m + 1.0) * (m + 1.0 + nu));
        s += t;
        as += std::abs(t);
        if (std::abs(t) < kEps * 1e-2 * std::abs(s) && m > m0 + 2) break;
    }
    return {s, as};
}

cplx bessel_i_series(double nu, cplx z, double* err) {
    SeriesResult c = bessel_i_core(nu, z);
    if (err) *err = kEps * (c.abs_sum / std::max(std::abs(c.sum), 1e-300)) * 10.0;
    return std::pow(0.5 * z, nu) * c.sum;
}

// Trapezoid rule on an even, doubly-exponentially decaying integrand over [0, T].
template <class F>
cplx trapezoid_halfline(F f, double T) {
    double h = 0.25;
    cplx prev = 0.0;
    for (int level = 0; level < 14; ++level) {
        int n = static_cast<int>(std::ceil(T / h));
        cplx s = 0.5 * f(0.0);
        for (int i = 1; i <= n; ++i) s += f(i * h);
        s *= h;
        if (level > 0 && std::abs(s - prev) <= 1e-15 * std::abs(s)) return s;
        prev = s;
        h *= 0.5;
    }
    return prev;
}

double cutoff_T(double nu, double rez) {
    // smallest T with rez*(cosh T - 1) - nu*T > 45
    double T = 0.5;
    while (rez * (std::cosh(T) - 1.0) - nu * T < 45.0 && T < 30.0) T += 0.25;
    return T;
}

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt, Re z > 0
cplx bessel_k_integral(double nu, cplx z) {
    double T = cutoff_T(nu, z.real());
    cplx ez = std::exp(-z);
    auto f = [&](double t) {
        // exp(-z (cosh t - 1)) keeps the e^{-z} factor out
        return std::exp(-z * (std::cosh(t) - 1.0)) * std::cosh(nu * t);
    };
    return ez * trapezoid_halfline(f, T);
}

// I_nu(z) = (1/pi) int_0^pi e^{z cos t} cos(nu t) dt - (sin(nu pi)/pi) int_0^inf e^{-z cosh t - nu t} dt
cplx bessel_i_integral(double nu, cplx z) {
    // first piece: Gauss-Legendre panels, enough to resolve |Im z| oscillation
    const int panels = 16 + static_cast<int>(std::abs(z.imag()) + std::abs(nu));
    static const double xg[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                 -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                 0.7966664774136267,  0.9602898564975363};
    static const double wg[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                 0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    cplx s1 = 0.0;
    double h = kPi / panels;
    for (int p = 0; p < panels; ++p) {
        double a = p * h;
        for (int i = 0; i < 8; ++i) {
            double t = a + 0.5 * h * (xg[i] + 1.0);
            s1 += wg[i] * 0.5 * h * std::exp(z * (std::cos(t) - 1.0)) * std::cos(nu * t);
        }
    }
    // factor e^{z} pulled out of the first piece
    cplx r = std::exp(z) * s1 / kPi;
    double sn = std::sin(nu * kPi);
    if (std::abs(sn) > 1e-15) {
        double T = cutoff_T(-nu, z.real());
        auto re = [&](double t) { return std::exp(-z * std::cosh(t) - nu * t).real(); };
        auto im = [&](double t) { return std::exp(-z * std::cosh(t) - nu * t).imag(); };
        using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
        cplx s2(GK::integrate(re, 0.0, T, 25, 1e-14), GK::integrate(im, 0.0, T, 25, 1e-14));
        r -= sn / kPi * s2;
    }
    return r;
}

cplx bessel_i(double nu, cplx z) {
    double err = 0.0;
    cplx v = bessel_i_series(nu, z, &err);
    if (err < 1e-13) return v;
    return bessel_i_integral(nu, z);
}

// K for small |z| from the series
cplx bessel_k_small(double nu, cplx z) {
    double n = std::round(nu);
    if (std::abs(nu - n) > 1e-12) {
        cplx im = bessel_i_series(-nu, z, nullptr);
        cplx ip = bessel_i_series(nu, z, nullptr);
        return kPi / (2.0 * std::sin(nu * kPi)) * (im - ip);
    }
    int N = static_cast<int>(n);
    cplx hz = 0.5 * z;
    cplx q = hz * hz;
    // finite part
    cplx s1 = 0.0;
    for (int k = 0; k < N; ++k) {
        double c = std::exp(std::lgamma(N - k) - std::lgamma(k + 1.0));
        s1 += c * std::pow(-q, k);
    }
    s1 *= 0.5 * std::pow(hz, -N);
    cplx logterm = (N % 2 == 0 ? -1.0 : 1.0) * std::log(hz) * bessel_i_series(N, z, nullptr);
    // psi(k+1) + psi(N+k+1)
    auto psi_int = [](int m) {  // digamma at positive integer m
        double s = -0.5772156649015329;
        for (int j = 1; j < m; ++j) s += 1.0 / j;
        return s;
    };
    cplx s3 = 0.0;
    cplx t = 1.0 / std::exp(std::lgamma(N + 1.0));
    for (int k = 0; k < 400; ++k) {
        cplx term = (psi_int(k + 1) + psi_int(N + k + 1)) * t;
        s3 += term;
        if (k > 3 && std::abs(term) < 1e-18 * std::abs(s3)) break;
        t *= q / ((k + 1.0) * (N + k + 1.0));
    }
    s3 *= (N % 2 == 0 ? 0.5 : -0.5) * std::pow(hz, N);
    return s1 + logterm + s3;
}

}  // namespace

BesselIK bessel_modified(double order, cplx z) {
    if (z == cplx(0.0, 0.0)) throw SingularArgument("K_nu(0)");
    BesselIK r;
    r.I = bessel_i(order, z);
    if (std::abs(z) <= 2.0)
        r.K = bessel_k_small(order, z);
    else
        r.K = bessel_k_integral(order, z);
    return r;
}

namespace {

const double kAi0 = 0.35502805388781723926;
const double kAip0 = -0.25881940379280679840;

void airy_maclaurin(cplx w, cplx& ai, cplx& aip) {
    if (w == cplx(0.0, 0.0)) {
        ai = kAi0;
        aip = kAip0;
        return;
    }
    // f = sum 3^k (1/3)_k w^{3k}/(3k)!,  g = sum 3^k (2/3)_k w^{3k+1}/(3k+1)!
    cplx w3 = w * w * w;
    cplx f = 1.0, fp = 0.0, g = w, gp = 1.0;
    cplx tf = 1.0, tg = w;
    for (int k = 1; k < 400; ++k) {
        tf *= w3 / ((3.0 * k - 1.0) * (3.0 * k));
        tg *= w3 / ((3.0 * k) * (3.0 * k + 1.0));
        f += tf;
        g += tg;
        fp += tf * (3.0 * k) / w;
        gp += tg * (3.0 * k + 1.0) / w;
        if (std::abs(tf) + std::abs(tg) < 1e-18 * (std::abs(f) + std::abs(g))) break;
    }
    ai = kAi0 * f + kAip0 * g;
    aip = kAi0 * fp + kAip0 * gp;
}

// asymptotic expansion for large |w|, |arg w| <= 2pi/3
void airy_asymptotic(cplx w, cplx& ai, cplx& aip) {
    cplx zeta = (2.0 / 3.0) * w * std::sqrt(w);
    cplx w4 = std::pow(w, 0.25);
    cplx su = 0.0, sv = 0.0;
    double u = 1.0;
    cplx zp = 1.0;
    double best = 1e300;
    for (int k = 0; k < 60; ++k) {
        double v = (k == 0) ? 1.0 : -(6.0 * k + 1.0) / (6.0 * k - 1.0) * u;
        cplx tu = ((k % 2) ? -1.0 : 1.0) * u * zp;
        cplx tv = ((k % 2) ? -1.0 : 1.0) * v * zp;
        if (std::abs(tu) > best) break;
        best = std::abs(tu);
        su += tu;
        sv += tv;
        zp /= zeta;
        double kk = k + 1.0;
        u *= (6.0 * kk - 5.0) * (6.0 * kk - 3.0) * (6.0 * kk - 1.0) / ((2.0 * kk - 1.0) * 216.0 * kk);
    }
    cplx e = std::exp(-zeta) / (2.0 * std::sqrt(kPi));
    ai = e / w4 * su;
    aip = -e * w4 * sv;
}

cplx airy_along_ray(cplx w) {
    double rho = std::abs(w);
    double th = std::arg(w);
    cplx dir = std::polar(1.0, th);
    cplx c3 = std::polar(1.0, 3.0 * th);
    auto coef = [&](double t, cplx& a, cplx& b) {
        a = 0.0;
        b = c3 * t;
    };
    std::vector<double> out = {rho};
    if (std::abs(th) <= kPi / 3.0) {
        // recessive direction: start far out and come inward
        const double R = std::max(rho, 14.0);
        cplx ai, aip;
        airy_asymptotic(R * dir, ai, aip);
        if (R == rho) return ai;
        auto res = detail::integrate_linear2(coef, R, ai, aip * dir, 0.0, out, 1e-13);
        return res[0].y * std::exp(res[0].log_scale);
    }
    cplx ai = kAi0, aip = kAip0;
    auto res = detail::integrate_linear2(coef, 0.0, ai, aip * dir, 0.0, out, 1e-13);
    return res[0].y * std::exp(res[0].log_scale);
}

}  // namespace

cplx airy_ai(cplx w) {
    double rho = std::abs(w);
    double th = std::abs(std::arg(w));
    if (rho <= 2.5) {
        cplx ai, aip;
        airy_maclaurin(w, ai, aip);
        return ai;
    }
    if (rho >= 14.0 && th <= 2.0 * kPi / 3.0) {
        cplx ai, aip;
        airy_asymptotic(w, ai, aip);
        return ai;
    }
    if (rho >= 14.0) {
        // Ai(-z) = e^{i pi/3} Ai(z e^{i pi/3}) + e^{-i pi/3} Ai(z e^{-i pi/3}), |arg z| < pi/3
        cplx z = -w;
        cplx a1, a2, d;
        airy_asymptotic(z * std::polar(1.0, kPi / 3.0), a1, d);
        airy_asymptotic(z * std::polar(1.0, -kPi / 3.0), a2, d);
        return std::polar(1.0, kPi / 3.0) * a1 + std::polar(1.0, -kPi / 3.0) * a2;
    }
    return airy_along_ray(w);
}

}  // namespace hyperres
