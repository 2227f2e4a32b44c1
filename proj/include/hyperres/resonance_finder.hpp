#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperres/mode_solver.hpp"

namespace hyperres {

struct Box {
    double x0, x1;  // real part
    double y0, y1;  // imaginary part

    bool contains(cplx z) const {
        return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
    }
    cplx center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }
};

/// Analytic function returned in scaled form so that huge or tiny moduli survive.
using AnalyticFn = std::function<Scaled(cplx)>;

struct WindingOptions {
    int max_depth = 18;        // bisections of one boundary segment
    int dilations = 3;         // retries with a dilated box before giving up
    double dilation = 1e-3;
    double samples_per_unit = 4.0;
};

/// Zeros of f inside the box counted with order. Throws BoundaryZero if the
/// boundary phase cannot be resolved.
int winding_count(const AnalyticFn& f, const Box& box, const WindingOptions& opt = {});

struct Resonance {
    cplx zeta;
    int l = 0;
    int zero_order = 1;
    long long total_multiplicity = 0;
    double residual = 0.0;
    bool refined = true;
    bool near_background = false;  // tiny step: within 10|c| of a zero of F^k_0
    Box box{};  // containing box, kept for unrefined zeros
};

struct FinderOptions {
    double tol = 1e-10;
    int margin = 5;
    double t_ceiling = 60.0;
    int l_ceiling = 0;  // 0 derives a ceiling from t_ceiling
    bool parallel = true;
    WindingOptions winding{};
};

/// Zeros of F^k in |s - n/2| <= t_max. Zeros with Re s >= n/2 go to eigen_side.
struct ModeScan {
    std::vector<Resonance> resonances;
    std::vector<Resonance> eigen_side;
    int boxes = 0;
    long long evaluations = 0;
};
ModeScan mode_scan(const Potential& pot, int l, double t_max, const FinderOptions& opt = {});

std::vector<Resonance> mode_resonances(const Potential& pot, int l, double t_max, double tol);

struct CertificateEntry {
    int l;
    int winding;  // zeros found in the disk for this mode
};

struct ResonanceSet {
    std::string potential;
    int n = 1;
    double r0 = 1.0;
    double t_max = 0.0;
    std::vector<Resonance> resonances;  // sorted by (l, Im, Re)
    std::vector<Resonance> eigen_side;
    int l_max_used = -1;
    std::vector<CertificateEntry> certificate;
    bool background_only = false;  // V = 0 with n even: no resonances by definition
};

ResonanceSet all_resonances(const Potential& pot, double t_max, const FinderOptions& opt = {});

/// Mode cutoff before the margin: ceil(t_max / min_theta rho(theta)).
int mode_cutoff(double t_max, double r0, int n);

void write_resonance_csv(const ResonanceSet& set, std::ostream& os);
ResonanceSet read_resonance_csv(std::istream& is, int n, double r0, double t_max);

/// Snap to the grid j/2 + 0.23 (down or up).
double snap_down(double x);
double snap_up(double x);

}  // namespace hyperres
