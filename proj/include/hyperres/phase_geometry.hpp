#pragma once

#include <complex>
#include <iosfwd>
#include <vector>

namespace hyperres {

using cplx = std::complex<double>;

struct PhaseValues {
    cplx phi;
    cplx phi_prime_r;
    cplx p;
    cplx q;  // principal branch; crosses a cut for real alpha > 1
    cplx zeta;
};

PhaseValues phase(cplx alpha, double r);

/// Growth exponent H(alpha, r), evaluated directly from its definition.
double exponent_H(cplx alpha, double r);
/// Same quantity routed through phi and p.
double exponent_H_via_phase(cplx alpha, double r);
/// d/dr H(alpha, r) in closed form.
double exponent_H_dr(cplx alpha, double r);

/// Smallest x > 0 with H(x e^{i theta}, r0) = 0.
double rho_curve(double theta, double r0);

double indicator(double theta, double r0, int n);

struct WeylConstants {
    double A0;
    double An;
};
WeylConstants weyl_constant(int n, double r0);

/// h'(-pi/2+) from the closed edge integral.
double indicator_edge_derivative(int n, double r0);

struct IndicatorTable {
    std::vector<double> theta_grid;
    std::vector<double> h_values;
    std::vector<double> rho_values;
    double r0 = 1.0;
    int n = 1;
};
/// Uniform grid over [-pi/2, pi/2]. parallel=false gives the serial reference.
IndicatorTable indicator_table(double r0, int n, int points = 181, bool parallel = true);
void write_indicator_csv(const IndicatorTable& t, std::ostream& os);

}  // namespace hyperres
