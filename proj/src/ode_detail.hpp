#pragma once

// Adaptive integration of complex second-order linear ODEs  y'' = a(t) y' + b(t) y
// with running renormalization, so exponentially growing solutions stay in range.

#include <array>
#include <cmath>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "hyperres/scaled.hpp"

namespace hyperres::detail {

using State4 = std::array<double, 4>;

struct LinearSample {
    cplx y;
    cplx dy;
    double log_scale;
};

/// Integrates from t0 toward each point of `outs` in order (all on the same side of t0,
/// monotone). Returns (y, y') at each output as mantissa plus a shared log scale.
template <class Coef>
std::vector<LinearSample> integrate_linear2(Coef coef, double t0, cplx y0, cplx dy0,
                                            double log_scale0, const std::vector<double>& outs,
                                            double rel_tol) {
    namespace ode = boost::numeric::odeint;
    using stepper_t = ode::runge_kutta_fehlberg78<State4>;
    auto stepper = ode::make_controlled<stepper_t>(rel_tol * 1e-2, rel_tol);

    auto sys = [&coef](const State4& x, State4& dxdt, double t) {
        cplx y(x[0], x[1]);
        cplx dy(x[2], x[3]);
        cplx a, b;
        coef(t, a, b);
        cplx d2 = a * dy + b * y;
        dxdt[0] = dy.real();
        dxdt[1] = dy.imag();
        dxdt[2] = d2.real();
        dxdt[3] = d2.imag();
    };

    double m = std::max(std::abs(y0), std::abs(dy0));
    if (m == 0.0) m = 1.0;
    State4 x = {y0.real() / m, y0.imag() / m, dy0.real() / m, dy0.imag() / m};
    double scale = log_scale0 + std::log(m);

    std::vector<LinearSample> res;
    res.reserve(outs.size());
    double t = t0;
    double span = 0.0;
    for (double o : outs) span = std::max(span, std::abs(o - t0));
    double dt = (outs.empty() ? 0.0 : (outs.front() >= t0 ? 1.0 : -1.0)) *
                std::max(1e-6, 0.01 * span);

    for (double target : outs) {
        const double dir = target >= t ? 1.0 : -1.0;
        int guard = 0;
        while (std::abs(target - t) > 1e-15 * std::max(1.0, std::abs(target))) {
            if (++guard > 2000000) break;
            double rem = target - t;
            if (dir * dt <= 0.0) dt = dir * std::abs(dt);
            bool last = std::abs(dt) >= std::abs(rem);
            double h = last ? rem : dt;
            double hh = h;
            auto r = stepper.try_step(sys, x, t, hh);
            if (r == ode::success) {
                // try_step advanced t and proposed the next step in hh
                if (last) t = target;
                dt = hh;
                double mm = std::max(std::hypot(x[0], x[1]), std::hypot(x[2], x[3]));
                if (mm > 0.0) {
                    for (double& v : x) v /= mm;
                    scale += std::log(mm);
                }
            } else {
                dt = hh;
            }
        }
        res.push_back({cplx(x[0], x[1]), cplx(x[2], x[3]), scale});
    }
    return res;
}

}  // namespace hyperres::detail
