#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "hyperres/scaled.hpp"

namespace hyperres {

struct StepProfile {
    cplx c;
};
/// V(r) = kappa (r0 - r)^beta on [0, r0].
struct PowerProfile {
    cplx kappa;
    double beta;
};
/// Piecewise-linear interpolation of samples on an increasing grid.
struct SampledProfile {
    std::vector<double> r;
    std::vector<cplx> v;
};

struct Potential {
    int n = 1;
    double r0 = 1.0;
    std::variant<StepProfile, PowerProfile, SampledProfile> profile = StepProfile{0.0};
    double sigma = 1.0;

    static Potential step(int n, cplx c, double r0);
    static Potential power(int n, cplx kappa, double beta, double r0);
    static Potential sampled(int n, std::vector<double> r, std::vector<cplx> v, double sigma,
                             double r0);

    cplx operator()(double r) const;
    bool is_zero() const;
    bool is_real() const;
    const StepProfile* as_step() const { return std::get_if<StepProfile>(&profile); }
    /// Largest radius below which V vanishes identically (0 if none).
    double vanishing_radius() const;
    std::string describe() const;
};

struct ModeIndex {
    int l;
    double k;
    long long mu;
};

long long multiplicity(int n, int l);
ModeIndex mode_index(int n, int l);

/// F^k = 2^{k-1} Gamma(k) * reduced. The reduced form stays finite at k = 0.
struct Coefficient {
    Scaled reduced;
    int l = 0;
    double k = 0.0;
    cplx s;
    double condition = 1.0;  // cancellation factor of the final Wronskian

    double log_prefactor() const;  // log(2^{k-1} Gamma(k)); +inf for k = 0
    /// F^k(s)/F^k_0(s) = reduced * Gamma(l+s); throws at the poles of Gamma(l+s).
    Scaled ratio_to_free() const;
};

Coefficient f0_coefficient(int n, int l, cplx s);
/// Zeros of F^k_0 inside |s| <= radius: s = -l-m.
std::vector<double> f0_zeros(int n, int l, double radius);

enum class FMethod { Auto, ClosedForm, Ode };

struct FOptions {
    FMethod method = FMethod::Auto;
    double r_match = 0.0;  // 0 picks the default matching radius
    double ode_tol = 1e-11;
    bool flip_omega_branch = false;
};

Coefficient f_coefficient(const Potential& pot, int l, cplx s, const FOptions& opt = {});

/// Shifted degree omega(s) for a step of height c.
cplx step_omega(int n, cplx c, cplx s, bool flip = false);

struct VolterraResult {
    std::vector<cplx> ratios;        // F_j / F_0
    std::vector<cplx> partial_sums;  // sum_{i<=j} F_i / F_0
    Coefficient sum;
    int panels = 0;
};
VolterraResult volterra_coefficients(const Potential& pot, int l, cplx s, int j_max = 12);

/// Lambda_k(s) as a Scaled value (its log is the useful quantity).
Scaled lambda_mode(const Potential& pot, int l, cplx s, double guard = 1e-9,
                   const FOptions& opt = {});

struct LogTau {
    double value = 0.0;
    int l_stop = 0;
};
LogTau log_tau(const Potential& pot, cplx s, double tol = 1e-10, bool parallel = true);

}  // namespace hyperres
