#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyperres/scaled.hpp"

namespace hyperres {

// Principal branch of log Gamma. Throws GammaPole at non-positive integers.
cplx log_gamma(cplx z);
/// 1/Gamma(z) as a Scaled value; exact zero at the poles of Gamma.
Scaled rgamma_scaled(cplx z);
/// log(sin(pi z)) without overflow for large |Im z|.
cplx log_sin_pi(cplx z);

cplx airy_ai(cplx w);

struct BesselIK {
    cplx I;
    cplx K;
};
// Modified Bessel functions for real order >= 0 and |arg z| < pi/2.
BesselIK bessel_modified(double order, cplx z);

/// P^{-k}_nu(cosh r) and Olver's normalized Q^k_nu(cosh r), with r-derivatives.
/// Values are stored as mantissas with separate log scales: P = p_value*exp(p_log_scale).
struct LegendrePair {
    cplx p_value{0.0, 0.0};
    cplx q_value{0.0, 0.0};
    cplx p_deriv_r{0.0, 0.0};
    cplx q_deriv_r{0.0, 0.0};
    double p_log_scale = 0.0;
    double q_log_scale = 0.0;

    Scaled p() const { return {p_value, p_log_scale}; }
    Scaled q() const { return {q_value, q_log_scale}; }
    Scaled dp() const { return {p_deriv_r, p_log_scale}; }
    Scaled dq() const { return {q_deriv_r, q_log_scale}; }
};

enum class LegendreStrategy { Auto, Series, Continuation };

struct LegendreOptions {
    double r_max = 5.0;
    LegendreStrategy strategy = LegendreStrategy::Auto;
    bool want_q = true;
    /// When false, degrees with Re nu < -1/2 are evaluated as given, for P and Q alike.
    bool reflect = true;
};

/// Wronskian normalization: Gamma(k+nu+1) sinh(r) W_r[P^{-k}_nu, Q^k_nu] == kLegendreWronskian.
/// Fixed from the small-r series limits; see tests/test_special_functions.cpp.
inline constexpr double kLegendreWronskian = -1.0;

LegendrePair legendre_pair(double k, cplx nu, double r, const LegendreOptions& opt = {});

/// Same pair at many radii from one continuation sweep. rs must be increasing.
std::vector<LegendrePair> legendre_sweep(double k, cplx nu, const std::vector<double>& rs);

/// Radial Legendre-type ODE  f'' + coth(r) f' - (nu(nu+1) + k^2/sinh^2 r + V(r)) f = 0.
struct RadialState {
    Scaled f;
    Scaled df;
};
using RadialPotential = std::function<cplx(double)>;
RadialState integrate_radial(double k, cplx nu, const RadialPotential& V, double r_from,
                             double r_to, RadialState init, double rel_tol = 1e-12);

// Leading-order asymptotic regimes; used as validation envelopes, not as evaluation paths.
struct LegendreEstimate {
    Scaled p;
    Scaled q;
};
/// Airy-type uniform approximation in k with alpha = (nu+1/2)/k, k > 0.
LegendreEstimate legendre_uniform_estimate(double k, cplx alpha, double r);
/// Modified Bessel approximation for large |nu| at fixed k.
LegendreEstimate legendre_bessel_estimate(double k, cplx nu, double r);

enum class LegendreRegime { Series, Uniform, Bessel, Continuation };
struct RegimeThresholds {
    double series_k_alpha = 25.0;
    double uniform_k_min = 15.0;
    double uniform_alpha_min = 0.05;
    double bessel_k_max = 15.0;
    double bessel_nu_min = 25.0;
};
/// Which regime a parameter point belongs to under the configured thresholds.
LegendreRegime classify_regime(double k, cplx nu, const RegimeThresholds& t = {});

}  // namespace hyperres
