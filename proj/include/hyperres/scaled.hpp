#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace hyperres {

using cplx = std::complex<double>;

/// m * exp(e). Keeps Legendre and Gamma quantities in range at large order.
struct Scaled {
    cplx m{0.0, 0.0};
    double e = 0.0;

    Scaled() = default;
    Scaled(cplx mant, double ex = 0.0) : m(mant), e(ex) {}

    static Scaled from_log(cplx L) {
        if (std::isinf(L.real()) && L.real() < 0.0) return Scaled();
        return Scaled(std::polar(1.0, L.imag()), L.real());
    }

    bool is_zero() const { return m == cplx(0.0, 0.0); }

    Scaled& normalize() {
        double a = std::abs(m);
        if (a > 0.0 && std::isfinite(a)) {
            m /= a;
            e += std::log(a);
        }
        return *this;
    }

    /// Complex log; the imaginary part is the principal argument of the mantissa.
    cplx log() const {
        if (is_zero()) return cplx(-std::numeric_limits<double>::infinity(), 0.0);
        return std::log(m) + e;
    }
    double log_abs() const {
        if (is_zero()) return -std::numeric_limits<double>::infinity();
        return std::log(std::abs(m)) + e;
    }

    cplx value() const {
        if (is_zero()) return 0.0;
        return m * std::exp(e);
    }
};

inline Scaled operator*(const Scaled& a, const Scaled& b) {
    Scaled r(a.m * b.m, a.e + b.e);
    return r.normalize();
}
inline Scaled operator*(const Scaled& a, cplx b) {
    Scaled r(a.m * b, a.e);
    return r.normalize();
}
inline Scaled operator/(const Scaled& a, const Scaled& b) {
    Scaled r(a.m / b.m, a.e - b.e);
    return r.normalize();
}
inline Scaled operator+(const Scaled& a, const Scaled& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    double e = std::max(a.e, b.e);
    Scaled r(a.m * std::exp(a.e - e) + b.m * std::exp(b.e - e), e);
    return r.normalize();
}
inline Scaled operator-(const Scaled& a) { return Scaled(-a.m, a.e); }
inline Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }

}  // namespace hyperres
