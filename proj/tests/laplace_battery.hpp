#pragma once

#include <cmath>
#include <vector>

#include "hyperres/laplace_oracle.hpp"

namespace battery {

using hyperres::cplx;
using hyperres::LaplaceProblem;

// endpoint b = 1; u(t) = (1-t)^{sigma-1} w(t), so A = w(1)
inline std::vector<LaplaceProblem> laplace_battery(double sigma) {
    const cplx I(0.0, 1.0);
    auto edge = [sigma](double t) { return std::pow(1.0 - t, sigma - 1.0); };
    std::vector<LaplaceProblem> out;
    {
        LaplaceProblem p;
        p.phi = [](double t) { return cplx(t, 0.0); };
        p.dphi = [](double) { return cplx(1.0, 0.0); };
        p.u = [edge](double t) { return cplx(edge(t), 0.0); };
        out.push_back(p);
    }
    {
        LaplaceProblem p;
        p.phi = [I](double t) { return t + 0.4 * I * t * t; };
        p.dphi = [I](double t) { return 1.0 + 0.8 * I * t; };
        p.u = [edge](double t) { return edge(t) * (1.0 + t); };
        p.A = 2.0;
        out.push_back(p);
    }
    {
        LaplaceProblem p;
        p.phi = [I](double t) { return std::log(1.0 + t) - 0.3 * I * t; };
        p.dphi = [I](double t) { return 1.0 / (1.0 + t) - 0.3 * I; };
        p.u = [edge, I](double t) { return edge(t) * std::exp(I * t); };
        p.A = std::exp(I);
        out.push_back(p);
    }
    {
        LaplaceProblem p;
        p.phi = [I](double t) { return std::sinh(t) + I * std::cos(2.0 * t); };
        p.dphi = [I](double t) { return std::cosh(t) - 2.0 * I * std::sin(2.0 * t); };
        p.u = [edge](double t) { return cplx(edge(t) / (2.0 + t), 0.0); };
        p.A = 1.0 / 3.0;
        out.push_back(p);
    }
    for (auto& p : out) p.sigma = sigma;
    return out;
}

}  // namespace battery
