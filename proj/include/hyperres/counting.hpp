#pragma once

#include <iosfwd>
#include <vector>

#include "hyperres/resonance_finder.hpp"

namespace hyperres {

struct BackgroundPoint {
    int k;            // location s = -k
    long long mult;   // m_0(-k)
};

/// Resonances of the free Laplacian within |s - n/2| <= t_max (empty for n even).
std::vector<BackgroundPoint> background_set(int n, double t_max);
long long background_multiplicity(int n, int k);
long long background_count(int n, double t);
/// A_n^{(0)}: 2/(n+1)! for n odd, 0 for n even.
double background_constant(int n);

struct CountValue {
    long long N = 0;
    double N_tilde = 0.0;
};
/// N_V(t) and the averaged count (n+1) int_0^t (N(u) - N(0))/u du, integrated exactly.
CountValue counting_function(const ResonanceSet& set, double t);

struct CountingRow {
    double t;
    long long N;
    long long N0;
    double N_tilde;
    double weyl_pred;
};
std::vector<CountingRow> counting_table(const ResonanceSet& set, const std::vector<double>& t_grid,
                                        double An);
void write_counting_csv(const std::vector<CountingRow>& rows, std::ostream& os);

struct SectorCount {
    long long count = 0;
    double averaged = 0.0;
};
/// Points with 0 < |z - n/2| <= t and arg(z - n/2) in [theta1, theta2], angles in [pi/2, 3pi/2].
/// An angle equal to theta1 is counted only when theta1 == pi/2, so adjacent sectors add up.
SectorCount sector_count(const ResonanceSet& set, double t, double theta1, double theta2);

/// Leading-order sector count from the indicator function.
double sector_prediction(int n, double r0, double theta1, double theta2, double t);
/// Centered difference of the indicator, step 1e-4.
double indicator_derivative(double theta, double r0, int n);

struct SectorReport {
    double theta1, theta2;
    double measured;
    double predicted;
    double ratio;
};
SectorReport sector_report(const ResonanceSet& set, double r0, double theta1, double theta2, double t);
void write_sector_json(const SectorReport& r, std::ostream& os);

struct ContourCheck {
    double a;    // radius actually used, kept away from Z/2
    double lhs;  // averaged count from the resonance set
    double rhs;  // background term plus the log|tau| boundary integral
    double boundary_integral;
    bool extrapolated = false;  // nodes within 0.02 of +-pi/2 were extrapolated
};
/// Radius snapped to floor(2a)/2 + 0.23.
double contour_radius(double a);
ContourCheck contour_check(const Potential& pot, const ResonanceSet& set, double a,
                           bool parallel = true);

struct WeylReport {
    double C_hat;    // least squares N ~ C t^{n+1} on [t_max/2, t_max]
    double C_tilde;  // same fit for the averaged count
    double An;
    double ratio;
    std::vector<double> t;
    std::vector<double> pointwise;  // N(t) / (A_n t^{n+1})
};
WeylReport weyl_report(const ResonanceSet& set, int n, double r0);

}  // namespace hyperres
