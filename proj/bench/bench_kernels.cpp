// Serial reference vs OpenMP for the three parallel kernels.
// usage: hyperres_bench [t_max]   (default 15)

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hyperres/mode_solver.hpp"
#include "hyperres/phase_geometry.hpp"
#include "hyperres/resonance_finder.hpp"

using namespace hyperres;

namespace {

template <class F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void line(const char* name, double serial, double parallel, bool same) {
    std::printf("%-28s serial %8.3f s  parallel %8.3f s  speedup %5.2f  %s\n", name, serial, parallel,
                serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const double t_max = argc > 1 ? std::atof(argv[1]) : 15.0;
    std::printf("threads %d\n", omp_get_max_threads());

    IndicatorTable a, b;
    double ts = seconds([&] { a = indicator_table(1.0, 2, 721, false); });
    double tp = seconds([&] { b = indicator_table(1.0, 2, 721, true); });
    line("indicator_table (721)", ts, tp, a.h_values == b.h_values);

    Potential pot = Potential::step(2, 1.0, 1.0);
    FinderOptions serial;
    serial.parallel = false;
    ResonanceSet rs, rp;
    ts = seconds([&] { rs = all_resonances(pot, t_max, serial); });
    tp = seconds([&] { rp = all_resonances(pot, t_max); });
    bool same = rs.resonances.size() == rp.resonances.size();
    for (size_t i = 0; same && i < rs.resonances.size(); ++i)
        same = rs.resonances[i].zeta == rp.resonances[i].zeta;
    char name[64];
    std::snprintf(name, sizeof name, "all_resonances (t=%g)", t_max);
    line(name, ts, tp, same);

    double vs = 0.0, vp = 0.0;
    ts = seconds([&] {
        for (int i = 0; i < 8; ++i) vs += log_tau(pot, cplx(1.0 + 20.23 * std::cos(0.2 * i), 20.23 * std::sin(0.2 * i)), 1e-10, false).value;
    });
    tp = seconds([&] {
        for (int i = 0; i < 8; ++i) vp += log_tau(pot, cplx(1.0 + 20.23 * std::cos(0.2 * i), 20.23 * std::sin(0.2 * i)), 1e-10, true).value;
    });
    line("log_tau (8 points, a=20.23)", ts, tp, std::abs(vs - vp) <= 1e-9 * std::abs(vs));
    return 0;
}
