#include "hyperres/laplace_oracle.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "hyperres/errors.hpp"
#include "hyperres/special_functions.hpp"

namespace hyperres {

namespace {

using Rule = boost::math::quadrature::gauss<double, 30>;

// integral of exp(2k (phi - phi(b))) u over panels that shrink geometrically toward b
cplx panel_sum(const LaplaceProblem& p, double k, double first, int& panels) {
    const cplx pb = p.phi(p.b);
    auto g = [&](double t) { return std::exp(2.0 * k * (p.phi(t) - pb)) * p.u(t); };
    std::vector<double> d = {0.0};
    const double L = p.b - p.a;
    for (double x = first; x < L; x *= 2.0) d.push_back(x);
    d.push_back(L);
    cplx total = 0.0;
    for (size_t i = 0; i + 1 < d.size(); ++i) {
        const double lo = p.b - d[i + 1], hi = p.b - d[i];
        auto re = [&](double t) { return g(t).real(); };
        auto im = [&](double t) { return g(t).imag(); };
        total += cplx(Rule::integrate(re, lo, hi), Rule::integrate(im, lo, hi));
    }
    panels = static_cast<int>(d.size()) - 1;
    return total;
}

}  // namespace

LaplaceResult laplace_compare(const LaplaceProblem& p, double k) {
    if (!(k > 0.0) || !(p.b > p.a) || p.sigma < 1.0)
        throw Error("laplace_oracle", "need k > 0, b > a, sigma >= 1");
    for (int i = 0; i <= 64; ++i) {
        double t = p.a + (p.b - p.a) * i / 64.0;
        if (!(p.dphi(t).real() > 0.0)) {
            std::ostringstream os;
            os << "Re phi' <= 0 at t=" << t;
            throw Error("laplace_oracle", os.str());
        }
    }
    const cplx dpb = p.dphi(p.b);
    const double scale = 1.0 / (2.0 * k * std::abs(dpb));
    int panels = 0, panels2 = 0;
    cplx J = panel_sum(p, k, 1e-3 * scale, panels);
    cplx J2 = panel_sum(p, k, 0.25e-3 * scale, panels2);
    if (!(std::abs(J - J2) <= 1e-9 * std::abs(J))) {
        std::ostringstream os;
        os << "panel refinement moved the integral by " << std::abs(J - J2) / std::abs(J) << " with "
           << panels << " panels";
        throw OscillatoryFailure(os.str());
    }
    LaplaceResult r;
    r.panels = panels2;
    const cplx lpb = 2.0 * k * p.phi(p.b);
    r.I = Scaled::from_log(lpb) * J2;
    // A Gamma(sigma) (2k phi'(b))^{-sigma}
    cplx lf = std::log(p.A) + std::lgamma(p.sigma) - p.sigma * std::log(2.0 * k * dpb);
    r.f = Scaled::from_log(lpb + lf);
    r.ratio = J2 / std::exp(lf);
    return r;
}

}  // namespace hyperres
