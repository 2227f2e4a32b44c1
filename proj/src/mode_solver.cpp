#include "hyperres/mode_solver.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>

#include "hyperres/errors.hpp"
#include "hyperres/phase_geometry.hpp"
#include "hyperres/special_functions.hpp"

namespace hyperres {

namespace {

constexpr double kPi = std::numbers::pi;
using lcplx = std::complex<long double>;

lcplx to_long(const Scaled& x) {
    if (x.is_zero()) return 0.0L;
    return lcplx(x.m.real(), x.m.imag()) * std::exp(static_cast<long double>(x.e));
}

constexpr double kAutoCondition = 1e5;
constexpr double kSmallStep = 0.1;

double default_match_radius(const Potential& pot) {
    double rv = pot.vanishing_radius();
    if (rv > 1e-3) return rv;
    // frozen-V projection is exact for a step; otherwise its error is O(r_m^3)
    if (pot.as_step()) return pot.r0 / 10.0;
    return 1e-3 * pot.r0;
}

}  // namespace

Potential Potential::step(int n, cplx c, double r0) {
    Potential p;
    p.n = n;
    p.r0 = r0;
    p.profile = StepProfile{c};
    p.sigma = 1.0;
    return p;
}

Potential Potential::power(int n, cplx kappa, double beta, double r0) {
    Potential p;
    p.n = n;
    p.r0 = r0;
    p.profile = PowerProfile{kappa, beta};
    p.sigma = beta + 1.0;
    return p;
}

Potential Potential::sampled(int n, std::vector<double> r, std::vector<cplx> v, double sigma,
                             double r0) {
    Potential p;
    p.n = n;
    p.r0 = r0;
    p.profile = SampledProfile{std::move(r), std::move(v)};
    p.sigma = sigma;
    return p;
}

cplx Potential::operator()(double r) const {
    if (r > r0) return 0.0;
    if (auto s = std::get_if<StepProfile>(&profile)) return s->c;
    if (auto p = std::get_if<PowerProfile>(&profile)) {
        if (p->beta == 0.0) return p->kappa;
        return p->kappa * std::pow(r0 - r, p->beta);
    }
    const auto& sp = std::get<SampledProfile>(profile);
    if (sp.r.empty()) return 0.0;
    if (r <= sp.r.front()) return sp.v.front();
    if (r >= sp.r.back()) return sp.v.back();
    auto it = std::upper_bound(sp.r.begin(), sp.r.end(), r);
    size_t i = static_cast<size_t>(it - sp.r.begin());
    double t = (r - sp.r[i - 1]) / (sp.r[i] - sp.r[i - 1]);
    return (1.0 - t) * sp.v[i - 1] + t * sp.v[i];
}

bool Potential::is_zero() const {
    if (auto s = std::get_if<StepProfile>(&profile)) return s->c == cplx(0.0, 0.0);
    if (auto p = std::get_if<PowerProfile>(&profile)) return p->kappa == cplx(0.0, 0.0);
    const auto& sp = std::get<SampledProfile>(profile);
    return std::all_of(sp.v.begin(), sp.v.end(), [](cplx x) { return x == cplx(0.0, 0.0); });
}

bool Potential::is_real() const {
    if (auto s = std::get_if<StepProfile>(&profile)) return s->c.imag() == 0.0;
    if (auto p = std::get_if<PowerProfile>(&profile)) return p->kappa.imag() == 0.0;
    const auto& sp = std::get<SampledProfile>(profile);
    return std::all_of(sp.v.begin(), sp.v.end(), [](cplx x) { return x.imag() == 0.0; });
}

double Potential::vanishing_radius() const {
    const auto* sp = std::get_if<SampledProfile>(&profile);
    if (!sp) return 0.0;
    size_t i = 0;
    while (i < sp->v.size() && sp->v[i] == cplx(0.0, 0.0)) ++i;
    if (i == 0) return 0.0;
    if (i >= sp->v.size()) return r0;
    return sp->r[i - 1];
}

std::string Potential::describe() const {
    std::ostringstream os;
    os.precision(17);
    if (auto s = std::get_if<StepProfile>(&profile))
        os << "step c=(" << s->c.real() << "," << s->c.imag() << ")";
    else if (auto p = std::get_if<PowerProfile>(&profile))
        os << "power kappa=(" << p->kappa.real() << "," << p->kappa.imag() << ") beta=" << p->beta;
    else
        os << "sampled points=" << std::get<SampledProfile>(profile).r.size();
    os << " r0=" << r0 << " n=" << n << " sigma=" << sigma;
    return os.str();
}

long long multiplicity(int n, int l) {
    // dimension of degree-l harmonics on S^n: C(n+l, n) - C(n+l-2, n)
    auto binom = [](long long a, long long b) -> long long {
        if (b < 0 || a < b || a < 0) return 0;
        b = std::min(b, a - b);
        long long r = 1;
        for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    return binom(n + l, n) - binom(n + l - 2, n);
}

ModeIndex mode_index(int n, int l) { return {l, l + 0.5 * (n - 1), multiplicity(n, l)}; }

double Coefficient::log_prefactor() const {
    if (k == 0.0) return std::numeric_limits<double>::infinity();
    return (k - 1.0) * std::log(2.0) + std::lgamma(k);
}

Scaled Coefficient::ratio_to_free() const {
    cplx z = double(l) + s;
    try {
        return reduced * Scaled::from_log(log_gamma(z));
    } catch (const GammaPole&) {
        std::ostringstream os;
        os << "F/F0 at a zero of F0, s=" << s;
        throw LatticeSingularity(os.str());
    }
}

Coefficient f0_coefficient(int n, int l, cplx s) {
    Coefficient c;
    c.l = l;
    c.k = l + 0.5 * (n - 1);
    c.s = s;
    // Gamma(k + s - (n-1)/2) = Gamma(l + s)
    c.reduced = rgamma_scaled(double(l) + s);
    return c;
}

std::vector<double> f0_zeros(int, int l, double radius) {
    std::vector<double> z;
    for (int m = 0; l + m <= radius; ++m) z.push_back(-double(l + m));
    return z;
}

cplx step_omega(int n, cplx c, cplx s, bool flip) {
    cplx d = s - 0.5 * n;
    cplx root = std::sqrt(d * d + c);
    return flip ? -0.5 - root : -0.5 + root;
}

namespace {

Coefficient closed_form(const Potential& pot, int l, cplx s, const FOptions& opt) {
    const StepProfile* st = pot.as_step();
    const int n = pot.n;
    const double k = l + 0.5 * (n - 1);
    const cplx nu = s - 0.5 * (n + 1);
    const cplx om = step_omega(n, st->c, s, opt.flip_omega_branch);
    const double r0 = pot.r0;
    LegendrePair q = legendre_pair(k, nu, r0);
    LegendreOptions po;
    po.want_q = false;
    LegendrePair p = legendre_pair(k, om, r0, po);
    Scaled a = p.p() * q.dq(), b = p.dp() * q.q();
    Scaled W = a - b;
    Coefficient c;
    c.l = l;
    c.k = k;
    c.s = s;
    c.condition = std::exp(std::max(a.log_abs(), b.log_abs()) - W.log_abs());
    c.reduced = W * cplx(std::sinh(r0) / kLegendreWronskian, 0.0);
    return c;
}

Coefficient ode_path(const Potential& pot, int l, cplx s, const FOptions& opt) {
    const int n = pot.n;
    const double k = l + 0.5 * (n - 1);
    const cplx nu = s - 0.5 * (n + 1);
    const double r0 = pot.r0;
    const double rm = opt.r_match > 0.0 ? opt.r_match : default_match_radius(pot);
    LegendrePair q = legendre_pair(k, nu, r0);
    RadialPotential V = [&pot](double r) { return pot(r); };
    RadialState st;
    try {
        st = integrate_radial(k, nu, V, r0, rm, {q.q(), q.dq()}, opt.ode_tol);
    } catch (const std::exception& e) {
        throw MatchingFailure(e.what(), rm, 0.0);
    }
    // local basis with the potential frozen at the matching radius
    const cplx vref = pot(rm);
    const cplx om = step_omega(n, vref, s);
    LegendreOptions po;
    po.want_q = false;
    LegendrePair p = legendre_pair(k, om, rm, po);
    Scaled a = p.p() * st.df, b = p.dp() * st.f;
    Scaled W = a - b;
    double cond = std::exp(std::max(a.log_abs(), b.log_abs()) - W.log_abs());
    if (!std::isfinite(cond) || cond * opt.ode_tol > 1e-4) {
        throw MatchingFailure("projection ill-conditioned", rm, cond);
    }
    Coefficient c;
    c.l = l;
    c.k = k;
    c.s = s;
    c.condition = cond;
    c.reduced = W * cplx(std::sinh(rm) / kLegendreWronskian, 0.0);
    return c;
}

}  // namespace

Coefficient f_coefficient(const Potential& pot, int l, cplx s, const FOptions& opt) {
    FMethod m = opt.method;
    if (m == FMethod::Auto && pot.is_zero()) return f0_coefficient(pot.n, l, s);
    if (m == FMethod::Auto && pot.as_step()) {
        Coefficient c = closed_form(pot, l, s, opt);
        // small steps: P_omega and Q_nu are nearly dependent; the Volterra series is not.
        // Near zeros of F the cancellation is expected and harmless for larger steps.
        if (std::abs(pot.as_step()->c) < kSmallStep && c.condition > kAutoCondition) {
            try {
                VolterraResult v = volterra_coefficients(pot, l, s, 60);
                return v.sum;
            } catch (const Error&) {
            }
        }
        return c;
    }
    if (m == FMethod::Auto) m = FMethod::Ode;
    if (m == FMethod::ClosedForm) {
        if (!pot.as_step()) throw Error("mode_solver", "closed form needs a step profile");
        return closed_form(pot, l, s, opt);
    }
    return ode_path(pot, l, s, opt);
}

namespace {

// 8-point Gauss-Legendre on [-1, 1]
constexpr std::array<double, 8> kGx = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                       -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                       0.7966664774136267,  0.9602898564975363};
constexpr std::array<double, 8> kGw = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
                                       0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
                                       0.2223810344533745, 0.1012285362903763};

// S[i][j] = int_{x_i}^{1} L_j(x) dx for the Lagrange basis on the Gauss nodes
std::array<std::array<double, 8>, 8> tail_matrix() {
    std::array<std::array<double, 8>, 8> S{};
    auto L = [](int j, double x) {
        double v = 1.0;
        for (int m = 0; m < 8; ++m)
            if (m != j) v *= (x - kGx[m]) / (kGx[j] - kGx[m]);
        return v;
    };
    for (int i = 0; i < 8; ++i) {
        double a = kGx[i];
        for (int j = 0; j < 8; ++j) {
            double s = 0.0;
            for (int q = 0; q < 8; ++q) {
                double y = a + (1.0 - a) * 0.5 * (kGx[q] + 1.0);
                s += kGw[q] * 0.5 * (1.0 - a) * L(j, y);
            }
            S[i][j] = s;
        }
    }
    return S;
}

}  // namespace

VolterraResult volterra_coefficients(const Potential& pot, int l, cplx s, int j_max) {
    const int n = pot.n;
    const double k = l + 0.5 * (n - 1);
    const cplx nu = s - 0.5 * (n + 1);
    const double r0 = pot.r0;
    const double tmin = 1e-8 * r0;

    // panel boundaries, refined toward r = 0 and on the oscillation scale
    const double hmax = r0 / std::max(64.0, 4.0 * k);
    std::vector<double> bounds = {r0};
    for (double b = r0; b > tmin;) {
        double h = std::min({hmax, 0.5 * b, 2.0 * b / (k + 2.0), 0.5 / (std::abs(nu) + 1.0)});
        b = std::max(b - h, tmin);
        bounds.push_back(b);
    }
    std::reverse(bounds.begin(), bounds.end());
    const int panels = static_cast<int>(bounds.size()) - 1;
    std::vector<double> nodes;
    nodes.reserve(panels * 8);
    for (int p = 0; p < panels; ++p) {
        double a = bounds[p], b = bounds[p + 1];
        for (double x : kGx) nodes.push_back(a + (b - a) * 0.5 * (x + 1.0));
    }
    auto pairs = legendre_sweep(k, nu, nodes);
    // kernel basis: P with the recessive partner. For Re nu < -1/2 that is Q of the
    // reflected degree, not the reflected Q (which grows with P and cancels).
    const bool flip = nu.real() < -0.5;
    const cplx nu_k = flip ? -1.0 - nu : nu;
    std::vector<LegendrePair> kpairs;
    if (flip) kpairs = legendre_sweep(k, nu_k, nodes);
    const size_t N = nodes.size();
    std::vector<lcplx> P(N), Q(N), V(N), v(N);
    std::vector<long double> shp(N), shm(N);
    for (size_t i = 0; i < N; ++i) {
        P[i] = to_long(pairs[i].p());
        Q[i] = to_long(flip ? kpairs[i].q() : pairs[i].q());
        cplx vv = pot(nodes[i]);
        V[i] = lcplx(vv.real(), vv.imag());
        long double sh = std::sinh(static_cast<long double>(nodes[i]));
        shp[i] = std::pow(sh, 0.5L * (n + 1));
        shm[i] = std::pow(sh, -0.5L * (n - 1));
        v[i] = shm[i] * to_long(pairs[i].q());
    }
    const cplx lg = log_gamma(k + nu + 1.0);
    const lcplx gamma_l = std::exp(lcplx(lg.real(), lg.imag()));
    const cplx lgk = log_gamma(k + nu_k + 1.0);
    const lcplx gamma_k = std::exp(lcplx(lgk.real(), lgk.imag()));
    const long double w = kLegendreWronskian;
    static const auto S = tail_matrix();

    VolterraResult res;
    res.panels = panels;
    res.ratios.push_back(1.0);
    res.partial_sums.push_back(1.0);
    lcplx sum = 1.0L;  // in units of F_0
    std::vector<lcplx> fA(N), fB(N), A(N), B(N);
    for (int j = 1; j <= j_max; ++j) {
        for (size_t i = 0; i < N; ++i) {
            fA[i] = shp[i] * Q[i] * V[i] * v[i];
            fB[i] = shp[i] * P[i] * V[i] * v[i];
        }
        lcplx Aend = 0.0L, Bend = 0.0L;
        for (int p = panels - 1; p >= 0; --p) {
            long double half = 0.5L * (bounds[p + 1] - bounds[p]);
            for (int i = 0; i < 8; ++i) {
                lcplx sa = 0.0L, sb = 0.0L;
                for (int jj = 0; jj < 8; ++jj) {
                    sa += static_cast<long double>(S[i][jj]) * fA[p * 8 + jj];
                    sb += static_cast<long double>(S[i][jj]) * fB[p * 8 + jj];
                }
                A[p * 8 + i] = Aend + half * sa;
                B[p * 8 + i] = Bend + half * sb;
            }
            lcplx ta = 0.0L, tb = 0.0L;
            for (int jj = 0; jj < 8; ++jj) {
                ta += static_cast<long double>(kGw[jj]) * fA[p * 8 + jj];
                tb += static_cast<long double>(kGw[jj]) * fB[p * 8 + jj];
            }
            Aend += half * ta;
            Bend += half * tb;
        }
        // reduced coefficient of the next iterate, then F_j/F_0 = G_j Gamma(k+nu+1)
        lcplx Gj = -Bend / w;
        lcplx ratio = Gj * gamma_l;
        sum += ratio;
        res.ratios.push_back(cplx(double(ratio.real()), double(ratio.imag())));
        res.partial_sums.push_back(cplx(double(sum.real()), double(sum.imag())));
        long double worst = 0.0L;
        for (size_t i = 0; i < N; ++i) {
            lcplx pa = P[i] * A[i], qb = Q[i] * B[i];
            v[i] = (gamma_k / w) * shm[i] * (pa - qb);
            long double gross = std::abs(pa) + std::abs(qb);
            worst = std::max(worst, gross / std::max(std::abs(pa - qb), 1e-4900L));
        }
        // P and Q carry double precision only; the kernel combination must not eat it
        if (worst * 1e-15L > 1e-9L) {
            std::ostringstream os;
            os << "kernel cancellation " << double(worst) << " at l=" << l << " s=" << s;
            throw PrecisionExhausted(os.str());
        }
        if (std::abs(ratio) < 1e-17L * std::abs(sum)) break;
    }
    // divergence: the tail ratios must settle below one
    const auto& r = res.ratios;
    const size_t m = r.size();
    if (m >= 4) {
        double q1 = std::abs(r[m - 1]) / std::max(std::abs(r[m - 2]), 1e-300);
        double q2 = std::abs(r[m - 2]) / std::max(std::abs(r[m - 3]), 1e-300);
        bool tiny = std::abs(r[m - 1]) < 1e-14 * std::abs(res.partial_sums.back());
        bool finite = std::isfinite(q1) && std::isfinite(q2) && std::isfinite(std::abs(res.partial_sums.back()));
        if (!finite || (!tiny && (q1 >= 0.9 || q2 >= 0.9))) {
            std::ostringstream os;
            os << "l=" << l << " k=" << k << " s=" << s << " ratio " << q1;
            throw SeriesDivergent(os.str());
        }
    }
    Coefficient c = f0_coefficient(n, l, s);
    cplx ps = res.partial_sums.back();
    c.reduced = c.reduced * ps;
    res.sum = c;
    return res;
}

Scaled lambda_mode(const Potential& pot, int l, cplx s, double guard, const FOptions& opt) {
    const int n = pot.n;
    cplx d = s - 0.5 * n;
    double dist = std::min(std::abs(d - cplx(std::round(2.0 * d.real()) / 2.0, 0.0)), 1e300);
    if (dist < guard) {
        std::ostringstream os;
        os << "s=" << s << " distance " << dist;
        throw LatticeSingularity(os.str());
    }
    Coefficient a = f_coefficient(pot, l, double(n) - s, opt);
    Coefficient b = f_coefficient(pot, l, s, opt);
    cplx lg;
    try {
        lg = log_gamma(double(l + n) - s) - log_gamma(double(l) + s);
    } catch (const GammaPole&) {
        std::ostringstream os;
        os << "s=" << s;
        throw LatticeSingularity(os.str());
    }
    return (a.reduced / b.reduced) * Scaled::from_log(lg);
}

LogTau log_tau(const Potential& pot, cplx s, double tol, bool parallel) {
    LogTau out;
    if (pot.is_zero()) return out;
    const int n = pot.n;
    double sign = 1.0;
    if (s.real() < 0.5 * n) {
        s = double(n) - s;
        sign = -1.0;
    }
    cplx d = s - 0.5 * n;
    double a = std::abs(d);
    double th = std::arg(d);
    double rho = rho_curve(std::clamp(th, -0.5 * kPi, 0.5 * kPi), pot.r0);
    int l_need = static_cast<int>(std::ceil(a / rho - 0.5 * (n - 1))) + 2;
    const int chunk = 8;
    const int l_cap = 2000;
    double total = 0.0;
    int small_run = 0;
    int l = 0;
    std::vector<double> terms(chunk);
    while (l < l_cap) {
        std::vector<std::exception_ptr> errs(chunk);
        auto term = [&](int i) {
            try {
                terms[i] = double(multiplicity(n, l + i)) * lambda_mode(pot, l + i, s).log_abs();
            } catch (...) {
                errs[i] = std::current_exception();
            }
        };
        if (parallel) {
#pragma omp parallel for schedule(dynamic)
            for (int i = 0; i < chunk; ++i) term(i);
        } else {
            for (int i = 0; i < chunk; ++i) term(i);
        }
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        bool done = false;
        for (int i = 0; i < chunk; ++i) {
            total += terms[i];
            if (std::abs(terms[i]) < 0.1 * tol)
                ++small_run;
            else
                small_run = 0;
            if (l + i >= l_need && small_run >= 3) {
                out.l_stop = l + i;
                done = true;
                break;
            }
        }
        if (done) break;
        l += chunk;
    }
    if (out.l_stop == 0) out.l_stop = l;
    out.value = sign * total;
    return out;
}

}  // namespace hyperres
