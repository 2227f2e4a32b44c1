#include "hyperres/resonance_finder.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <iomanip>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "hyperres/errors.hpp"
#include "hyperres/phase_geometry.hpp"

namespace hyperres {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOffset = 0.23;
constexpr double kTinyStep = 1e-2;

double wrap(double a) {
    a = std::remainder(a, 2.0 * kPi);
    return a;
}

struct PointHash {
    size_t operator()(const std::pair<double, double>& p) const {
        size_t a = std::hash<double>{}(p.first), b = std::hash<double>{}(p.second);
        return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    }
};

// log f with memoized samples; boxes from one subdivision share edge points
class Sampler {
  public:
    explicit Sampler(const AnalyticFn& f) : f_(f) {}

    cplx log_at(cplx z) {
        auto key = std::make_pair(z.real(), z.imag());
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        Scaled v = f_(z);
        ++evaluations;
        cplx L = v.is_zero() ? cplx(-INFINITY, 0.0) : v.log();
        cache_.emplace(key, L);
        return L;
    }
    Scaled value_at(cplx z) {
        ++evaluations;
        return f_(z);
    }

    long long evaluations = 0;

  private:
    const AnalyticFn& f_;
    std::unordered_map<std::pair<double, double>, cplx, PointHash> cache_;
};

double segment_phase(Sampler& S, cplx za, cplx La, cplx zb, cplx Lb, int depth,
                     const WindingOptions& opt) {
    if (!std::isfinite(La.real()) || !std::isfinite(Lb.real()))
        throw BoundaryZero("zero or non-finite sample on the boundary");
    double d = wrap(Lb.imag() - La.imag());
    double dm = std::abs(Lb.real() - La.real());
    if (std::abs(d) < 0.5 * kPi && dm < 2.0) return d;
    if (depth >= opt.max_depth) {
        std::ostringstream os;
        os << "phase step unresolved near " << za;
        throw BoundaryZero(os.str());
    }
    cplx zm = 0.5 * (za + zb);
    cplx Lm = S.log_at(zm);
    return segment_phase(S, za, La, zm, Lm, depth + 1, opt) +
           segment_phase(S, zm, Lm, zb, Lb, depth + 1, opt);
}

// initial samples sit on a global lattice so that neighbouring boxes reuse them
double edge_phase(Sampler& S, cplx a, cplx b, const WindingOptions& opt) {
    const double step = 1.0 / opt.samples_per_unit;
    std::vector<cplx> pts = {a};
    const bool horizontal = a.imag() == b.imag();
    double ta = horizontal ? a.real() : a.imag();
    double tb = horizontal ? b.real() : b.imag();
    const double dir = tb > ta ? 1.0 : -1.0;
    double t = dir > 0 ? std::floor(ta / step) * step : std::ceil(ta / step) * step;
    for (;;) {
        t += dir * step;
        if ((tb - t) * dir <= 1e-12) break;
        pts.push_back(horizontal ? cplx(t, a.imag()) : cplx(a.real(), t));
    }
    pts.push_back(b);
    double total = 0.0;
    cplx Lprev = S.log_at(pts[0]);
    for (size_t i = 1; i < pts.size(); ++i) {
        cplx L = S.log_at(pts[i]);
        total += segment_phase(S, pts[i - 1], Lprev, pts[i], L, 0, opt);
        Lprev = L;
    }
    return total;
}

int winding_once(Sampler& S, const Box& b, const WindingOptions& opt) {
    cplx c0(b.x0, b.y0), c1(b.x1, b.y0), c2(b.x1, b.y1), c3(b.x0, b.y1);
    double total = edge_phase(S, c0, c1, opt) + edge_phase(S, c1, c2, opt) +
                   edge_phase(S, c2, c3, opt) + edge_phase(S, c3, c0, opt);
    double w = total / (2.0 * kPi);
    double r = std::round(w);
    if (std::abs(w - r) > 0.25) {
        std::ostringstream os;
        os << "non-integral winding " << w;
        throw BoundaryZero(os.str());
    }
    return static_cast<int>(r);
}

int winding_cached(Sampler& S, const Box& box, const WindingOptions& opt) {
    for (int attempt = 0;; ++attempt) {
        Box b = box;
        double d = attempt * opt.dilation;
        b.x0 -= d;
        b.x1 += d;
        b.y0 -= d;
        b.y1 += d;
        try {
            return winding_once(S, b, opt);
        } catch (const BoundaryZero&) {
            if (attempt >= opt.dilations) throw;
        }
    }
}

// split lines: Re on j/2 + 0.23, Im on +-(j/2 + 0.23); midpoint once no line fits
double split_re(double a, double b) {
    double mid = 0.5 * (a + b);
    double g = std::round((mid - kOffset) * 2.0) / 2.0 + kOffset;
    if (g - a > 1e-9 && b - g > 1e-9 && b - a > 0.75) return g;
    return mid;
}

double split_im(double a, double b) {
    double mid = 0.5 * (a + b);
    if (b - a > 0.75) {
        double am = std::abs(mid);
        double g = std::round((am - kOffset) * 2.0) / 2.0 + kOffset;
        if (g < kOffset) g = kOffset;
        g = mid < 0 ? -g : g;
        if (g - a > 1e-9 && b - g > 1e-9) return g;
    }
    if (a < 0.0 && b > 0.0 && b - a > 0.1) {
        // keep the real axis inside a box rather than on an edge
        return a + b > 0.0 ? 0.5 * a : 0.5 * b;
    }
    return mid;
}

struct NewtonOutcome {
    cplx z;
    bool ok = false;
    double residual = 0.0;
};

NewtonOutcome newton(Sampler& S, const Box& box, int order, double tol) {
    NewtonOutcome out;
    cplx z = box.center();
    const double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
    Box guard = box;
    guard.x0 -= 0.1 * span;
    guard.x1 += 0.1 * span;
    guard.y0 -= 0.1 * span;
    guard.y1 += 0.1 * span;
    double scale = -INFINITY;
    for (cplx c : {cplx(box.x0, box.y0), cplx(box.x1, box.y0), cplx(box.x1, box.y1), cplx(box.x0, box.y1)})
        scale = std::max(scale, S.log_at(c).real());
    const double h = 1e-6 * std::max(1.0, std::min(span, 1.0));
    for (int it = 0; it < 60; ++it) {
        Scaled g = S.value_at(z);
        if (g.is_zero()) {
            out.z = z;
            out.ok = true;
            out.residual = 0.0;
            return out;
        }
        Scaled gp = S.value_at(z + h) - S.value_at(z - h);
        cplx ratio = (g / gp).value() * (2.0 * h);
        cplx delta = -double(order) * ratio;
        if (!std::isfinite(delta.real()) || !std::isfinite(delta.imag())) break;
        int damp = 0;
        while (!guard.contains(z + delta) && damp < 20) {
            delta *= 0.5;
            ++damp;
        }
        z += delta;
        if (std::abs(delta) < 1e-14 * std::max(1.0, std::abs(z))) {
            out.ok = box.contains(z) || guard.contains(z);
            break;
        }
    }
    out.z = z;
    Scaled g = S.value_at(z);
    out.residual = g.is_zero() ? 0.0 : std::exp(g.log_abs() - scale);
    out.ok = out.ok && out.residual <= tol;
    return out;
}

double sup_modulus(const Potential& pot) {
    double m = 0.0;
    for (int i = 0; i <= 200; ++i) m = std::max(m, std::abs(pot(pot.r0 * i / 200.0)));
    return m;
}

}  // namespace

double snap_down(double x) { return std::floor((x - kOffset) * 2.0) / 2.0 + kOffset; }
double snap_up(double x) { return std::ceil((x - kOffset) * 2.0) / 2.0 + kOffset; }

int winding_count(const AnalyticFn& f, const Box& box, const WindingOptions& opt) {
    Sampler S(f);
    return winding_cached(S, box, opt);
}

ModeScan mode_scan(const Potential& pot, int l, double t_max, const FinderOptions& opt) {
    const int n = pot.n;
    const double c = 0.5 * n;
    ModeScan out;
    AnalyticFn G = [&](cplx s) { return f_coefficient(pot, l, s).reduced; };
    Sampler S(G);

    const double xL = snap_down(c - t_max);
    const double xR = snap_up(c + 0.5 * std::ceil(2.0 * std::sqrt(sup_modulus(pot))));
    const double yT = snap_up(t_max);

    // tiles of about 8 x 8 on the split lines
    std::vector<double> xs = {xL}, ys = {-yT};
    while (xR - xs.back() > 8.25) xs.push_back(xs.back() + 8.0);
    xs.push_back(xR);
    std::vector<double> yp = {kOffset};
    while (yT - yp.back() > 8.25) yp.push_back(yp.back() + 8.0);
    yp.push_back(yT);
    for (auto it = yp.rbegin(); it != yp.rend(); ++it) ys.push_back(-*it);
    ys.pop_back();
    ys.push_back(-kOffset);
    ys.push_back(kOffset);
    for (double y : yp)
        if (y > kOffset) ys.push_back(y);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

    std::deque<Box> work;
    for (size_t i = 0; i + 1 < xs.size(); ++i)
        for (size_t j = 0; j + 1 < ys.size(); ++j) work.push_back({xs[i], xs[i + 1], ys[j], ys[j + 1]});

    std::vector<Resonance> found;
    while (!work.empty()) {
        Box b = work.front();
        work.pop_front();
        // nothing of this box lies in the disk
        const double dx = std::max({b.x0 - c, c - b.x1, 0.0});
        const double dy = std::max({b.y0, -b.y1, 0.0});
        if (std::hypot(dx, dy) > t_max) continue;
        ++out.boxes;
        int w = winding_cached(S, b, opt.winding);
        if (w == 0) continue;
        if (w < 0) throw BoundaryZero("negative winding for an entire function");
        const double span = std::max(b.x1 - b.x0, b.y1 - b.y0);
        auto split = [&]() {
            if (b.x1 - b.x0 >= b.y1 - b.y0) {
                double m = split_re(b.x0, b.x1);
                work.push_back({b.x0, m, b.y0, b.y1});
                work.push_back({m, b.x1, b.y0, b.y1});
            } else {
                double m = split_im(b.y0, b.y1);
                work.push_back({b.x0, b.x1, b.y0, m});
                work.push_back({b.x0, b.x1, m, b.y1});
            }
        };
        if (w >= 2 && span > 1e-7) {
            split();
            continue;
        }
        if (span > 2.0) {
            split();
            continue;
        }
        NewtonOutcome nt = newton(S, b, w, opt.tol);
        if (!nt.ok && span > 1e-4) {
            split();
            continue;
        }
        Resonance r;
        r.zeta = nt.ok ? nt.z : b.center();
        r.l = l;
        r.zero_order = w;
        r.residual = nt.residual;
        r.refined = nt.ok;
        r.box = b;
        found.push_back(r);
    }
    out.evaluations = S.evaluations;

    const long long mu = multiplicity(n, l);
    const StepProfile* st = pot.as_step();
    const double tiny = st && std::abs(st->c) < kTinyStep ? 10.0 * std::abs(st->c) : 0.0;
    for (auto& r : found) {
        // n even: bold Q vanishes identically where Gamma(l+s) has poles, so F^k has
        // simple zeros at s = -l-m that are not poles of the resolvent
        if (n % 2 == 0 && r.refined) {
            double m = std::round(r.zeta.real());
            if (m <= -l && std::abs(r.zeta - m) < 1e-8) --r.zero_order;
        }
        if (r.zero_order == 0) continue;
        r.total_multiplicity = r.zero_order * mu;
        if (tiny > 0.0) {
            double m = std::min(std::round(r.zeta.real()), double(-l));
            r.near_background = std::abs(r.zeta - m) < tiny;
        }
        if (std::abs(r.zeta - c) > t_max) continue;
        if (r.zeta.real() >= c)
            out.eigen_side.push_back(r);
        else
            out.resonances.push_back(r);
    }
    auto less = [](const Resonance& a, const Resonance& b) {
        if (a.zeta.imag() != b.zeta.imag()) return a.zeta.imag() < b.zeta.imag();
        return a.zeta.real() < b.zeta.real();
    };
    std::sort(out.resonances.begin(), out.resonances.end(), less);
    std::sort(out.eigen_side.begin(), out.eigen_side.end(), less);
    auto dedupe = [](std::vector<Resonance>& v) {
        std::vector<Resonance> u;
        for (const auto& r : v) {
            bool dup = false;
            for (auto& q : u)
                if (std::abs(q.zeta - r.zeta) < 1e-8) {
                    dup = true;
                    break;
                }
            if (!dup) u.push_back(r);
        }
        v.swap(u);
    };
    dedupe(out.resonances);
    dedupe(out.eigen_side);
    return out;
}

std::vector<Resonance> mode_resonances(const Potential& pot, int l, double t_max, double tol) {
    FinderOptions opt;
    opt.tol = tol;
    return mode_scan(pot, l, t_max, opt).resonances;
}

int mode_cutoff(double t_max, double r0, int) {
    double rmin = INFINITY;
    for (int i = 0; i <= 180; ++i) rmin = std::min(rmin, rho_curve(-0.5 * kPi + kPi * i / 180.0, r0));
    return static_cast<int>(std::ceil(t_max / rmin));
}

ResonanceSet all_resonances(const Potential& pot, double t_max, const FinderOptions& opt) {
    if (!(t_max > 0.0) || t_max > opt.t_ceiling) {
        std::ostringstream os;
        os << "t_max=" << t_max << " outside (0, " << opt.t_ceiling << "]";
        throw Error("resonance_finder", os.str());
    }
    ResonanceSet set;
    set.potential = pot.describe();
    set.n = pot.n;
    set.r0 = pot.r0;
    set.t_max = t_max;
    if (pot.is_zero() && pot.n % 2 == 0) {
        set.background_only = true;
        return set;
    }
    const int base = mode_cutoff(t_max, pot.r0, pot.n);
    const int ceiling =
        opt.l_ceiling > 0 ? opt.l_ceiling : mode_cutoff(opt.t_ceiling, pot.r0, pot.n) + 4 * opt.margin;
    int l_max = base + opt.margin;
    std::vector<ModeScan> scans;
    for (;;) {
        const int first = static_cast<int>(scans.size());
        const int count = l_max + 1 - first;
        scans.resize(l_max + 1);
        std::vector<std::exception_ptr> errs(count);
        if (opt.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
            for (int i = 0; i < count; ++i) {
                try {
                    scans[first + i] = mode_scan(pot, first + i, t_max, opt);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            }
        } else {
            for (int i = 0; i < count; ++i) {
                try {
                    scans[first + i] = mode_scan(pot, first + i, t_max, opt);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            }
        }
        for (auto& e : errs)
            if (e) std::rethrow_exception(e);
        bool clean = true;
        for (int l = l_max - opt.margin; l <= l_max; ++l)
            if (!scans[l].resonances.empty() || !scans[l].eigen_side.empty()) clean = false;
        if (clean) break;
        l_max += opt.margin;
        if (l_max > ceiling) {
            std::ostringstream os;
            os << "outer modes still carry zeros at l=" << l_max - opt.margin;
            throw CertificateFailure(os.str());
        }
    }
    set.l_max_used = l_max;
    for (int l = 0; l <= l_max; ++l) {
        const auto& sc = scans[l];
        set.resonances.insert(set.resonances.end(), sc.resonances.begin(), sc.resonances.end());
        set.eigen_side.insert(set.eigen_side.end(), sc.eigen_side.begin(), sc.eigen_side.end());
        if (l >= l_max - opt.margin) {
            int w = 0;
            for (const auto& r : sc.resonances) w += r.zero_order;
            for (const auto& r : sc.eigen_side) w += r.zero_order;
            set.certificate.push_back({l, w});
        }
    }
    return set;
}

void write_resonance_csv(const ResonanceSet& set, std::ostream& os) {
    os << "n,l,k,re_s,im_s,zero_order,mu,total_multiplicity,residual\n";
    os << std::setprecision(17);
    for (const auto& r : set.resonances) {
        os << set.n << ',' << r.l << ',' << r.l + 0.5 * (set.n - 1) << ',' << r.zeta.real() << ','
           << r.zeta.imag() << ',' << r.zero_order << ',' << multiplicity(set.n, r.l) << ','
           << r.total_multiplicity << ',' << r.residual << '\n';
    }
}

ResonanceSet read_resonance_csv(std::istream& is, int n, double r0, double t_max) {
    ResonanceSet set;
    set.n = n;
    set.r0 = r0;
    set.t_max = t_max;
    std::string line;
    std::getline(is, line);
    if (line.rfind("n,l,k,re_s,im_s", 0) != 0) throw Error("resonance_finder", "unexpected csv header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string f[9];
        for (auto& x : f) std::getline(ss, x, ',');
        Resonance r;
        r.l = std::stoi(f[1]);
        r.zeta = cplx(std::stod(f[3]), std::stod(f[4]));
        r.zero_order = std::stoi(f[5]);
        r.total_multiplicity = std::stoll(f[7]);
        r.residual = std::stod(f[8]);
        set.l_max_used = std::max(set.l_max_used, r.l);
        set.resonances.push_back(r);
    }
    return set;
}

}  // namespace hyperres
