#pragma once

#include <functional>

#include "hyperres/scaled.hpp"

namespace hyperres {

/// I(k) = int_a^b exp(2k phi(t)) u(t) dt with u(t) ~ A (b-t)^{sigma-1} near b.
struct LaplaceProblem {
    double a = 0.0;
    double b = 1.0;
    std::function<cplx(double)> phi;
    std::function<cplx(double)> dphi;
    cplx A{1.0, 0.0};
    double sigma = 1.0;
    std::function<cplx(double)> u;
};

struct LaplaceResult {
    Scaled I;
    Scaled f;
    cplx ratio;  // I / f
    int panels = 0;
};

/// Quadrature value against the endpoint approximation A Gamma(sigma) (2k phi'(b))^{-sigma} e^{2k phi(b)}.
LaplaceResult laplace_compare(const LaplaceProblem& prob, double k);

}  // namespace hyperres
