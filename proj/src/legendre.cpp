#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "hyperres/errors.hpp"
#include "hyperres/special_functions.hpp"
#include "ode_detail.hpp"

namespace hyperres {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;
constexpr double kSeriesAccept = 1e-13;
constexpr double kCombinedAccept = 1e-10;
constexpr double kOdeTol = 1e-13;
constexpr double kLowerAccept = 1e-10;

struct SeriesValue {
    Scaled f;
    Scaled df;
    double err = 1.0;
    bool ok = false;
};

// P^{-k}_nu(cosh r) = tanh^k(r/2)/Gamma(k+1) F(nu+1, -nu; k+1; -sinh^2(r/2))
SeriesValue p_series(double k, cplx nu, double r) {
    SeriesValue out;
    const double sh = std::sinh(0.5 * r);
    const double z = -sh * sh;
    if (-z >= 0.95) return out;
    cplx t = 1.0, s = 1.0, ds = 0.0;
    double as = 1.0;
    const double settle = std::abs(nu) + 1.0;
    int m = 0;
    for (; m < 4000; ++m) {
        cplx ratio = (nu + 1.0 + double(m)) * (double(m) - nu) / ((k + 1.0 + m) * (m + 1.0)) * z;
        t *= ratio;
        s += t;
        ds += t * double(m + 1) / z;
        as += std::abs(t);
        if (t == 0.0) break;
        if (m > settle && std::abs(t) < 1e-17 * std::abs(s) && std::abs(ratio) < 0.5) break;
    }
    if (m >= 4000) return out;
    double pref = k * std::log(std::tanh(0.5 * r)) - std::lgamma(k + 1.0);
    out.f = Scaled(s, pref);
    out.df = Scaled(s * (k / std::sinh(r)) - ds * (0.5 * std::sinh(r)), pref);
    out.f.normalize();
    out.df.normalize();
    out.err = 10.0 * kEps * as / std::max(std::abs(s), 1e-300);
    out.ok = true;
    return out;
}

bool is_nonpositive_integer(cplx z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

struct QSum {
    cplx s, ds;
    double err;
    bool ok;
};

// sum_{m>=m0} of t_m / t_{m0}; T = long double for the slowly converging small-r sums
template <class T>
QSum q_sum(cplx a0, cplx b0, cplx c0, double z0, int m0, int cap) {
    using C = std::complex<T>;
    const C a(a0.real(), a0.imag()), b(b0.real(), b0.imag()), c(c0.real(), c0.imag());
    const T z = z0;
    C t = 1, s = 1, ds = T(m0) / z;
    T as = 1;
    const T settle = std::max({std::abs(a), std::abs(b), std::abs(c)});
    const T tail = 10 * std::numeric_limits<T>::epsilon() / 100;
    int m = m0;
    for (; m < m0 + cap; ++m) {
        C ratio = (a + T(m)) * (b + T(m)) / ((c + T(m)) * T(m + 1)) * z;
        t *= ratio;
        s += t;
        ds += t * T(m + 1) / z;
        as += std::abs(t);
        T q = std::abs(ratio);
        // before m passes the parameters a single term can be small by accident
        if (T(m) <= settle) continue;
        // geometric bound on the tail once the ratio settles below one
        if (q < 1 && std::abs(t) * T(m + 1) / (1 - q) < tail * std::abs(s)) break;
    }
    const double eps = std::numeric_limits<T>::epsilon();
    return {cplx(double(s.real()), double(s.imag())), cplx(double(ds.real()), double(ds.imag())),
            10.0 * eps * double(as / std::max(std::abs(s), T(1e-300))), m < m0 + cap};
}

// Q^k_nu(x) = sqrt(pi) (x^2-1)^{k/2} / (2^{nu+1} x^{nu+k+1}) Fbold((nu+k)/2+1, (nu+k+1)/2; nu+3/2; 1/x^2)
SeriesValue q_series(double k, cplx nu, double r, bool extended = false) {
    SeriesValue out;
    const double x = std::cosh(r);
    const double z = 1.0 / (x * x);
    const cplx a = 0.5 * (nu + k) + 1.0;
    const cplx b = 0.5 * (nu + k + 1.0);
    const cplx c = nu + 1.5;

    int m0 = 0;
    Scaled lead;
    if (is_nonpositive_integer(c)) {
        m0 = static_cast<int>(-c.real()) + 1;
        cplx t = 1.0;
        for (int j = 0; j < m0; ++j) t *= (a + double(j)) * (b + double(j)) * z / (j + 1.0);
        lead = Scaled(t, 0.0);
    } else {
        lead = rgamma_scaled(c) * Scaled(std::pow(cplx(z), double(m0)), 0.0);
    }
    QSum qs = extended ? q_sum<long double>(a, b, c, z, m0, 60000)
                       : q_sum<double>(a, b, c, z, m0, 6000);
    if (!qs.ok) return out;
    const cplx s = qs.s, ds = qs.ds;
    const double shr = std::sinh(r);
    cplx lpref = 0.5 * std::log(kPi) + k * std::log(shr) - (nu + 1.0) * std::log(2.0) -
                 (nu + k + 1.0) * std::log(x);
    Scaled pref = Scaled::from_log(lpref) * lead;
    cplx dlog = k / std::tanh(r) - (nu + k + 1.0) * std::tanh(r);
    out.f = pref * s;
    out.df = pref * (s * dlog - ds * (2.0 * shr / (x * x * x)));
    // the prefactor and the long double rounding still carry double error
    out.err = qs.err + 10.0 * kEps;
    out.ok = true;
    return out;
}

RadialState integrate_plain(double k, cplx nu, double r_from, double r_to, RadialState init) {
    return integrate_radial(k, nu, nullptr, r_from, r_to, init, kOdeTol);
}

double p_start_radius(double k, cplx nu, double r) {
    double lam = std::max(1.0, std::abs(nu * (nu + 1.0)));
    double sh2 = 0.3 * (k + 1.0) / lam;
    double rs = 2.0 * std::asinh(std::sqrt(sh2));
    return std::min({rs, r, 1.5});
}

double q_start_radius(double k, cplx nu, double r) {
    const cplx a = 0.5 * (nu + k) + 1.0;
    const cplx b = 0.5 * (nu + k + 1.0);
    const cplx c = nu + 1.5;
    double need = std::max(1.0 / 0.3, std::abs(a * b) / (0.3 * (std::abs(c) + 1.0)));
    double R = std::acosh(std::sqrt(need));
    return std::max(R, r);
}

struct OneSided {
    Scaled f;
    Scaled df;
    double err;
};

// Q^k_{-1-nu} = Gamma(k+nu+1) cos(nu pi) P^{-k}_nu + Gamma(k+nu+1)/Gamma(k-nu) Q^k_nu
struct ReflectionCoeffs {
    Scaled A;
    Scaled B;
};
ReflectionCoeffs reflection_coeffs(double k, cplx nu) {
    cplx lg = log_gamma(k + nu + 1.0);
    // cos(pi nu) = sin(pi (nu + 1/2))
    Scaled A = Scaled::from_log(lg + log_sin_pi(nu + 0.5));
    Scaled B = Scaled::from_log(lg) * rgamma_scaled(k - nu);
    return {A, B};
}

// P from the two Q series; fast where the P series cancels (large |Im nu|)
bool p_via_q(double k, cplx nu, double r, OneSided& out) {
    SeriesValue qa = q_series(k, -1.0 - nu, r);
    SeriesValue qb = q_series(k, nu, r);
    if (!qa.ok || !qb.ok) return false;
    ReflectionCoeffs rc = reflection_coeffs(k, nu);
    if (rc.A.is_zero()) return false;
    Scaled t2 = rc.B * qb.f;
    Scaled f = qa.f - t2;
    Scaled df = qa.df - rc.B * qb.df;
    double big = std::max(qa.f.log_abs(), t2.log_abs());
    double cancel = std::exp(big - f.log_abs());
    double dbig = std::max(qa.df.log_abs(), (rc.B * qb.df).log_abs());
    cancel = std::max(cancel, std::exp(dbig - df.log_abs()));
    double err = (qa.err + qb.err + 100.0 * kEps) * cancel;
    if (!std::isfinite(err) || err > kCombinedAccept) return false;
    Scaled ia = Scaled(cplx(1.0, 0.0)) / rc.A;
    out = {f * ia, df * ia, err};
    out.f.normalize();
    out.df.normalize();
    return true;
}

OneSided p_eval(double k, cplx nu, double r, LegendreStrategy strat) {
    if (strat != LegendreStrategy::Continuation && r < 1.7) {
        SeriesValue sv = p_series(k, nu, r);
        if (sv.ok && (sv.err < kSeriesAccept || strat == LegendreStrategy::Series))
            return {sv.f, sv.df, sv.err};
    }
    if (strat == LegendreStrategy::Series) throw PrecisionExhausted("P series does not converge here");
    if (strat == LegendreStrategy::Auto && r > 0.45) {
        OneSided c;
        if (p_via_q(k, nu, r, c)) return c;
    }
    double rs = p_start_radius(k, nu, r);
    if (strat == LegendreStrategy::Continuation) rs = std::min(rs, 0.5 * r);
    SeriesValue sv = p_series(k, nu, rs);
    for (int tries = 0; tries < 40 && (!sv.ok || sv.err > kSeriesAccept); ++tries) {
        rs *= 0.5;
        sv = p_series(k, nu, rs);
    }
    if (!sv.ok) throw PrecisionExhausted("P start value");
    if (rs == r) return {sv.f, sv.df, sv.err};
    RadialState st = integrate_plain(k, nu, rs, r, {sv.f, sv.df});
    return {st.f, st.df, sv.err + 1e-12};
}

OneSided q_eval(double k, cplx nu, double r, LegendreStrategy strat) {
    // below Re nu = -1/2 Q is dominant at large r, so continuing inward is unstable
    const bool lower = nu.real() < -0.5;
    if (strat != LegendreStrategy::Continuation) {
        SeriesValue sv = q_series(k, nu, r);
        if (sv.ok && (sv.err < kSeriesAccept || strat == LegendreStrategy::Series))
            return {sv.f, sv.df, sv.err};
        if (lower && strat == LegendreStrategy::Auto) {
            if (!sv.ok || sv.err > kSeriesAccept) sv = q_series(k, nu, r, true);
            if (sv.ok && sv.err < kLowerAccept) return {sv.f, sv.df, sv.err};
            std::ostringstream os;
            os << "Q series at k=" << k << " nu=" << nu << " r=" << r << " loses significance ("
               << sv.err << ")";
            throw PrecisionExhausted(os.str());
        }
    }
    if (strat == LegendreStrategy::Series) throw PrecisionExhausted("Q series does not converge here");
    double R = q_start_radius(k, nu, r);
    if (strat == LegendreStrategy::Continuation) R = std::max(R, r + 1.0);
    SeriesValue sv = q_series(k, nu, R);
    for (int tries = 0; tries < 12 && (!sv.ok || sv.err > kSeriesAccept); ++tries) {
        R += 1.0;
        sv = q_series(k, nu, R);
    }
    if (!sv.ok) throw PrecisionExhausted("Q start value");
    RadialState st = integrate_plain(k, nu, R, r, {sv.f, sv.df});
    return {st.f, st.df, sv.err + 1e-12};
}

double wronskian_residual(double k, cplx nu, double r, const Scaled& P, const Scaled& dP,
                          const Scaled& Q, const Scaled& dQ) {
    Scaled W = P * dQ - dP * Q;
    Scaled g = Scaled::from_log(log_gamma(k + nu + 1.0));
    cplx v = (W * g * Scaled(cplx(std::sinh(r), 0.0))).value();
    return std::abs(v - kLegendreWronskian);
}

void check_range(double k, double r, const LegendreOptions& opt) {
    if (!(r > 0.0) || r > opt.r_max || !(k >= 0.0)) {
        std::ostringstream os;
        os << "legendre_pair outside domain: k=" << k << " r=" << r;
        throw PrecisionExhausted(os.str());
    }
}

}  // namespace

RadialState integrate_radial(double k, cplx nu, const RadialPotential& V, double r_from,
                             double r_to, RadialState init, double rel_tol) {
    const cplx lam = nu * (nu + 1.0);
    const double k2 = k * k;
    auto coef = [&](double r, cplx& a, cplx& b) {
        double sh = std::sinh(r);
        a = -std::cosh(r) / sh;
        b = lam + k2 / (sh * sh);
        if (V) b += V(r);
    };
    Scaled f0 = init.f, d0 = init.df;
    double e = std::max(f0.e, d0.e);
    cplx y0 = f0.is_zero() ? cplx(0.0) : f0.m * std::exp(f0.e - e);
    cplx dy0 = d0.is_zero() ? cplx(0.0) : d0.m * std::exp(d0.e - e);
    auto res = detail::integrate_linear2(coef, r_from, y0, dy0, e, {r_to}, rel_tol);
    RadialState out{Scaled(res[0].y, res[0].log_scale), Scaled(res[0].dy, res[0].log_scale)};
    out.f.normalize();
    out.df.normalize();
    return out;
}

LegendrePair legendre_pair(double k, cplx nu, double r, const LegendreOptions& opt) {
    check_range(k, r, opt);
    // P is invariant under nu -> -1-nu; work in Re nu >= -1/2
    const bool lower = nu.real() < -0.5;
    const cplx nup = lower && opt.reflect ? -1.0 - nu : nu;

    LegendrePair out;
    OneSided P = p_eval(k, nup, r, opt.strategy);
    out.p_value = P.f.m;
    out.p_log_scale = P.f.e;
    out.p_deriv_r = (P.df / Scaled(cplx(1.0, 0.0), P.f.e)).value();
    if (!opt.want_q) return out;

    if (!lower || !opt.reflect) {
        OneSided Q = q_eval(k, nu, r, opt.strategy);
        // for Re nu < -1/2 both solutions are dominant and W is not resolvable
        double res = lower ? 0.0 : wronskian_residual(k, nu, r, P.f, P.df, Q.f, Q.df);
        if (res > 1e-6) {
            std::ostringstream os;
            os << "k=" << k << " nu=" << nu << " r=" << r << " wronskian residual " << res;
            throw PrecisionExhausted(os.str());
        }
        out.q_value = Q.f.m;
        out.q_log_scale = Q.f.e;
        out.q_deriv_r = (Q.df / Scaled(cplx(1.0, 0.0), Q.f.e)).value();
        return out;
    }

    OneSided Q = q_eval(k, nup, r, opt.strategy);
    double res = wronskian_residual(k, nup, r, P.f, P.df, Q.f, Q.df);
    ReflectionCoeffs rc = reflection_coeffs(k, nup);
    Scaled t1 = rc.A * P.f, t2 = rc.B * Q.f;
    Scaled q = t1 + t2;
    Scaled dq = rc.A * P.df + rc.B * Q.df;
    double cancel = std::exp(std::max(t1.log_abs(), t2.log_abs()) - q.log_abs());
    if (!std::isfinite(cancel)) cancel = 1e300;
    if ((res + kEps) * cancel > 1e-6) {
        std::ostringstream os;
        os << "k=" << k << " nu=" << nu << " r=" << r << " reflected Q loses significance ("
           << cancel << ")";
        throw PrecisionExhausted(os.str());
    }
    out.q_value = q.m;
    out.q_log_scale = q.e;
    out.q_deriv_r = (dq / Scaled(cplx(1.0, 0.0), q.e)).value();
    return out;
}

std::vector<LegendrePair> legendre_sweep(double k, cplx nu, const std::vector<double>& rs) {
    std::vector<LegendrePair> out(rs.size());
    if (rs.empty()) return out;
    const bool lower = nu.real() < -0.5;
    const cplx nup = lower ? -1.0 - nu : nu;
    const cplx lam = nup * (nup + 1.0);
    const double k2 = k * k;
    auto coef = [&](double r, cplx& a, cplx& b) {
        double sh = std::sinh(r);
        a = -std::cosh(r) / sh;
        b = lam + k2 / (sh * sh);
    };

    // P: start below the first radius and continue outward
    std::vector<Scaled> P(rs.size()), dP(rs.size()), Q(rs.size()), dQ(rs.size());
    {
        double r0 = rs.front();
        OneSided s = p_eval(k, nup, r0, LegendreStrategy::Auto);
        P[0] = s.f;
        dP[0] = s.df;
        if (rs.size() > 1) {
            double e = std::max(s.f.e, s.df.e);
            std::vector<double> outs(rs.begin() + 1, rs.end());
            auto res = detail::integrate_linear2(coef, r0, s.f.m * std::exp(s.f.e - e),
                                                 s.df.m * std::exp(s.df.e - e), e, outs, kOdeTol);
            for (size_t i = 0; i < res.size(); ++i) {
                P[i + 1] = Scaled(res[i].y, res[i].log_scale).normalize();
                dP[i + 1] = Scaled(res[i].dy, res[i].log_scale).normalize();
            }
        }
    }
    // Q: start beyond the last radius and continue inward
    {
        double rl = rs.back();
        OneSided s = q_eval(k, nup, rl, LegendreStrategy::Auto);
        const size_t n = rs.size();
        Q[n - 1] = s.f;
        dQ[n - 1] = s.df;
        if (n > 1) {
            double e = std::max(s.f.e, s.df.e);
            std::vector<double> outs(rs.rbegin() + 1, rs.rend());
            auto res = detail::integrate_linear2(coef, rl, s.f.m * std::exp(s.f.e - e),
                                                 s.df.m * std::exp(s.df.e - e), e, outs, kOdeTol);
            for (size_t i = 0; i < res.size(); ++i) {
                Q[n - 2 - i] = Scaled(res[i].y, res[i].log_scale).normalize();
                dQ[n - 2 - i] = Scaled(res[i].dy, res[i].log_scale).normalize();
            }
        }
    }
    ReflectionCoeffs rc;
    if (lower) rc = reflection_coeffs(k, nup);
    for (size_t i = 0; i < rs.size(); ++i) {
        Scaled q = Q[i], dq = dQ[i];
        if (lower) {
            q = rc.A * P[i] + rc.B * Q[i];
            dq = rc.A * dP[i] + rc.B * dQ[i];
        }
        LegendrePair& o = out[i];
        o.p_value = P[i].m;
        o.p_log_scale = P[i].e;
        o.p_deriv_r = (dP[i] / Scaled(cplx(1.0, 0.0), P[i].e)).value();
        o.q_value = q.m;
        o.q_log_scale = q.e;
        o.q_deriv_r = (dq / Scaled(cplx(1.0, 0.0), q.e)).value();
    }
    return out;
}

LegendreRegime classify_regime(double k, cplx nu, const RegimeThresholds& t) {
    cplx alpha = k > 0.0 ? (nu + 0.5) / k : cplx(0.0);
    if (k * std::abs(alpha) <= t.series_k_alpha) return LegendreRegime::Series;
    if (k >= t.uniform_k_min && std::abs(alpha) >= t.uniform_alpha_min) return LegendreRegime::Uniform;
    if (k <= t.bessel_k_max && std::abs(nu) >= t.bessel_nu_min) return LegendreRegime::Bessel;
    return LegendreRegime::Continuation;
}

}  // namespace hyperres
