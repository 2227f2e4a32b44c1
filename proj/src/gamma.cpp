#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperres/errors.hpp"
#include "hyperres/special_functions.hpp"

namespace hyperres {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_nonpositive_integer(cplx z) {
    if (z.imag() != 0.0 || z.real() > 0.0) return false;
    return z.real() == std::round(z.real());
}

// B_{2m} / (2m (2m-1))
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,        1.0 / 1260.0,     -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0,   1.0 / 156.0,      -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

cplx stirling(cplx z) {
    cplx r = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    cplx zi = 1.0 / z;
    cplx z2 = zi * zi;
    cplx p = zi;
    for (double c : kStirling) {
        r += c * p;
        p *= z2;
    }
    return r;
}

}  // namespace

cplx log_sin_pi(cplx z) {
    // sin(pi z) = (e^{i pi z} - e^{-i pi z}) / 2i, factoring out the dominant exponential.
    cplx w = kPi * z;
    if (std::abs(w.imag()) < 1.0) return std::log(std::sin(w));
    const cplx I(0.0, 1.0);
    if (w.imag() > 0.0) {
        // sin w = e^{-i w} (e^{2 i w} - 1) / (2i)
        return -I * w + std::log((std::exp(2.0 * I * w) - 1.0) / (2.0 * I));
    }
    // sin w = e^{i w} (1 - e^{-2 i w}) / (2i)
    return I * w + std::log((1.0 - std::exp(-2.0 * I * w)) / (2.0 * I));
}

cplx log_gamma(cplx z) {
    if (is_nonpositive_integer(z)) {
        std::ostringstream os;
        os << "log_gamma(" << z.real() << ")";
        throw GammaPole(os.str());
    }
    if (z.real() < 0.5) {
        return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    cplx shift(0.0, 0.0);
    cplx zz = z;
    while (std::abs(zz) < 15.0) {
        shift += std::log(zz);
        zz += 1.0;
    }
    cplx r = stirling(zz) - shift;
    if (z.imag() == 0.0) r.imag(0.0);
    return r;
}

Scaled rgamma_scaled(cplx z) {
    if (is_nonpositive_integer(z)) return Scaled(cplx(0.0, 0.0), 0.0);
    return Scaled::from_log(-log_gamma(z));
}

}  // namespace hyperres
