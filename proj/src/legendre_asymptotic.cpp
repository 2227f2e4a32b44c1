#include <cmath>
#include <numbers>

#include "hyperres/phase_geometry.hpp"
#include "hyperres/special_functions.hpp"

namespace hyperres {

namespace {
constexpr double kPi = std::numbers::pi;
}

LegendreEstimate legendre_uniform_estimate(double k, cplx alpha, double r) {
    PhaseValues ph = phase(alpha, r);
    const double s = std::sinh(r);
    const cplx zeta = ph.zeta;
    const cplx root = std::pow(1.0 + alpha * alpha * s * s, 0.25);
    const cplx common = std::pow(k, 1.0 / 6.0) * std::pow(zeta, 0.25) / root;
    const double k23 = std::pow(k, 2.0 / 3.0);
    const cplx w = std::polar(1.0, 2.0 * kPi / 3.0);

    LegendreEstimate e;
    cplx p_mant = 2.0 * std::sqrt(kPi) * common * std::polar(1.0, kPi / 6.0) * airy_ai(k23 * w * zeta);
    e.p = Scaled::from_log(-k * ph.p - log_gamma(k + 1.0)) * p_mant;
    cplx q_mant = 2.0 * kPi * common * std::sqrt(0.5 * alpha) * airy_ai(k23 * zeta);
    e.q = Scaled::from_log(k * ph.q - log_gamma(k * alpha + 1.0)) * q_mant;
    return e;
}

LegendreEstimate legendre_bessel_estimate(double k, cplx nu, double r) {
    const cplx z = (nu + 0.5) * r;
    BesselIK b = bessel_modified(k, z);
    const double amp = std::sqrt(r / std::sinh(r));
    LegendreEstimate e;
    const cplx lnu = std::log(nu);
    e.p = Scaled::from_log(-k * lnu) * (amp * b.I);
    e.q = Scaled::from_log(k * lnu - log_gamma(k + nu + 1.0)) * (amp * b.K);
    return e;
}

}  // namespace hyperres
