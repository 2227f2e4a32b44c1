// Command-line front end: parses a potential config, runs one computation, writes CSV/JSON
// artifacts and a manifest.
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperres/cache.hpp"
#include "hyperres/counting.hpp"
#include "hyperres/errors.hpp"
#include "hyperres/mode_solver.hpp"
#include "hyperres/phase_geometry.hpp"
#include "hyperres/resonance_finder.hpp"
#include "hyperres/special_functions.hpp"
#include "hyperres/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hyperres;

namespace {

constexpr double kPi = std::numbers::pi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

cplx parse_complex(const std::string& s) {
    // a | bi | a+bi | a-bi
    static const std::regex re(R"(^\s*([+-]?[0-9.eE]+(?:[eE][+-]?[0-9]+)?)?\s*(?:([+-]?\s*[0-9.eE]*)i)?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, re) || (m[1].str().empty() && !m[2].matched))
        throw UsageError("cannot parse complex value '" + s + "'");
    double a = m[1].str().empty() ? 0.0 : std::stod(m[1].str());
    double b = 0.0;
    if (m[2].matched) {
        std::string t = m[2].str();
        t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
        if (t.empty() || t == "+")
            b = 1.0;
        else if (t == "-")
            b = -1.0;
        else
            b = std::stod(t);
    }
    return {a, b};
}

json inline_to_json(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("inline potential needs 'type:key=value,...'");
    json j;
    j["type"] = spec.substr(0, colon);
    std::stringstream ss(spec.substr(colon + 1));
    std::string kv;
    while (std::getline(ss, kv, ',')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("bad inline field '" + kv + "'");
        std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
        if (k == "c" || k == "kappa") {
            cplx z = parse_complex(v);
            j[k] = {z.real(), z.imag()};
        } else {
            try {
                j[k] = std::stod(v);
            } catch (const std::exception&) {
                throw UsageError("bad number in '" + kv + "'");
            }
        }
    }
    return j;
}

json load_potential_json(const std::string& arg) {
    if (arg.empty()) throw UsageError("--potential is required");
    if (arg.front() == '{') {
        try {
            return json::parse(arg);
        } catch (const json::exception& e) {
            throw UsageError(std::string("potential JSON: ") + e.what());
        }
    }
    if (fs::exists(arg)) {
        std::ifstream in(arg);
        try {
            return json::parse(in);
        } catch (const json::exception& e) {
            throw UsageError(std::string("potential file: ") + e.what());
        }
    }
    return inline_to_json(arg);
}

cplx complex_field(const json& j, const char* key) {
    if (!j.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (v.is_number()) return {v.get<double>(), 0.0};
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw UsageError(std::string("field '") + key + "' must be [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

double real_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw UsageError(std::string("missing numeric field '") + key + "'");
    return j.at(key).get<double>();
}

Potential potential_from_json(const json& j, int n) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw UsageError("potential needs a string 'type'");
    const std::string type = j["type"];
    const double r0 = real_field(j, "r0");
    if (!(r0 > 0.0)) throw UsageError("r0 must be positive");
    if (type == "step") return Potential::step(n, complex_field(j, "c"), r0);
    if (type == "power") {
        double beta = real_field(j, "beta");
        if (beta < 0.0) throw UsageError("beta must be >= 0");
        return Potential::power(n, complex_field(j, "kappa"), beta, r0);
    }
    if (type == "sampled") {
        if (!j.contains("r") || !j["r"].is_array() || !j.contains("v") || !j["v"].is_array())
            throw UsageError("sampled potential needs arrays 'r' and 'v'");
        std::vector<double> r;
        std::vector<cplx> v;
        for (const auto& x : j["r"]) {
            if (!x.is_number()) throw UsageError("'r' entries must be numbers");
            r.push_back(x.get<double>());
        }
        for (const auto& x : j["v"]) {
            if (!x.is_array() || x.size() != 2) throw UsageError("'v' entries must be [re, im]");
            v.emplace_back(x[0].get<double>(), x[1].get<double>());
        }
        if (r.size() != v.size() || r.size() < 2) throw UsageError("'r' and 'v' need equal length >= 2");
        for (size_t i = 1; i < r.size(); ++i)
            if (!(r[i] > r[i - 1])) throw UsageError("'r' must be increasing");
        if (r.back() > r0 + 1e-12) throw UsageError("samples extend beyond r0");
        return Potential::sampled(n, r, v, real_field(j, "sigma"), r0);
    }
    throw UsageError("unknown potential type '" + type + "'");
}

struct Config {
    std::string command;
    int n = 2;
    std::string potential = "step:c=1,r0=1";
    double t_max = 40.0;
    double tol = 1e-10;
    double theta1 = 0.75 * kPi;
    double theta2 = 1.25 * kPi;
    double radius = 30.0;
    std::string out = ".";
    int workers = 0;
    unsigned seed = 1;
};

json config_json(const Config& c, const json& pot) {
    return {{"command", c.command}, {"n", c.n},           {"potential", pot},
            {"t_max", c.t_max},     {"tol", c.tol},       {"theta1", c.theta1},
            {"theta2", c.theta2},   {"radius", c.radius}, {"seed", c.seed}};
}

void write_text(const fs::path& p, const std::string& s) {
    std::ofstream out(p);
    if (!out) throw Error("cli", "cannot write " + p.string());
    out << s;
}

json certificate_json(const ResonanceSet& set) {
    json c = json::array();
    for (const auto& e : set.certificate) c.push_back({{"l", e.l}, {"winding", e.winding}});
    int unrefined = 0, near_bg = 0;
    for (const auto& r : set.resonances) {
        unrefined += !r.refined;
        near_bg += r.near_background;
    }
    return {{"l_max_used", set.l_max_used},
            {"outer_modes", c},
            {"background_only", set.background_only},
            {"unrefined", unrefined},
            {"near_background", near_bg}};
}

FinderOptions finder_options(const Config& c) {
    FinderOptions o;
    o.tol = c.tol;
    return o;
}

void write_set_csvs(const ResonanceSet& set, const fs::path& dir) {
    std::ofstream r(dir / "resonances.csv");
    write_resonance_csv(set, r);
    ResonanceSet eig = set;
    eig.resonances = set.eigen_side;
    std::ofstream e(dir / "eigen_side.csv");
    write_resonance_csv(eig, e);
}

std::vector<double> t_grid(double t_max) {
    std::vector<double> g;
    const int m = static_cast<int>(std::floor(t_max * 4.0));
    for (int i = 1; i <= m; ++i) g.push_back(i * 0.25);
    if (g.empty() || g.back() < t_max) g.push_back(t_max);
    return g;
}

int selftest(const Config& c, json& report) {
    std::mt19937 rng(c.seed);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    bool all = true;
    auto record = [&](const std::string& name, bool ok, double value) {
        report[name] = {{"pass", ok}, {"value", value}};
        std::cout << (ok ? "PASS " : "FAIL ") << name << " " << std::setprecision(6) << value << "\n";
        all = all && ok;
    };
    double w = 0.0;
    for (int i = 0; i < 40; ++i) {
        double k = 0.5 * (rng() % 21);
        cplx nu(15.0 * U(rng), 15.0 * U(rng));
        // the pair (P, Q_nu) is dominant/dominant for Re nu < -1/2; use the reflected index
        if (nu.real() < -0.5) nu = -1.0 - nu;
        double r = 0.2 + 1.5 * (U(rng) + 1.0);
        LegendrePair p = legendre_pair(k, nu, r);
        Scaled W = (p.p() * p.dq() - p.dp() * p.q()) * cplx(std::sinh(r), 0.0) *
                   Scaled::from_log(log_gamma(k + nu + 1.0));
        w = std::max(w, std::abs(W.value() - kLegendreWronskian));
    }
    record("wronskian", w < 1e-8, w);
    double h = 0.0;
    for (int i = 0; i < 200; ++i) {
        cplx a(3.0 * U(rng), 3.0 * U(rng));
        if (std::abs(a - 1.0) < 1e-3 || std::abs(a + 1.0) < 1e-3 || a.real() == 0.0) continue;
        double r = 0.1 + (U(rng) + 1.0);
        h = std::max(h, std::abs(exponent_H(a, r) - exponent_H_via_phase(a, r)));
    }
    record("exponent_dual_formula", h < 1e-10, h);
    Potential pot = Potential::step(2, 1.0, 1.0);
    double fe = 0.0;
    for (int i = 0; i < 10; ++i) {
        cplx s(1.0 + 10.0 * U(rng), 10.0 * U(rng));
        int l = rng() % 10;
        Scaled a = lambda_mode(pot, l, s, 1e-9, {FMethod::ClosedForm});
        Scaled b = lambda_mode(pot, l, 2.0 - s, 1e-9, {FMethod::Ode});
        fe = std::max(fe, std::abs((a * b).value() - 1.0));
    }
    record("functional_equation", fe < 1e-8, fe);
    int wc = winding_count([](cplx z) { return Scaled{z * z * z, 0.0}; }, {-1.0, 1.0, -1.0, 1.0});
    record("winding_cubic", wc == 3, wc);
    bool bg = true;
    for (int j = 0; j <= 10; ++j) bg = bg && background_multiplicity(1, j) == 2 * j + 1;
    record("background_n1", bg, bg ? 1.0 : 0.0);
    return all ? 0 : 1;
}

int run(Config& c) {
    const auto t0 = std::chrono::steady_clock::now();
    if (c.workers > 0) omp_set_num_threads(c.workers);
    fs::path dir(c.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) throw UsageError("output directory not writable: " + c.out);

    if (c.n < 1) throw UsageError("--n must be >= 1");
    if (!(c.t_max > 0.0)) throw UsageError("--tmax must be positive");
    if (!(c.tol > 0.0)) throw UsageError("--tol must be positive");
    json manifest;
    json potj;
    Potential pot;
    if (c.command != "selftest") {
        potj = load_potential_json(c.potential);
        pot = potential_from_json(potj, c.n);
    }
    manifest["config"] = config_json(c, potj);
    int status = 0;

    if (c.command == "resonances") {
        bool hit = false;
        ResonanceSet set = cached_resonances(pot, c.t_max, finder_options(c), &hit);
        write_set_csvs(set, dir);
        manifest["certificates"] = certificate_json(set);
        manifest["cache_hit"] = hit;
        manifest["artifacts"] = {"resonances.csv", "eigen_side.csv"};
    } else if (c.command == "count" || c.command == "weyl") {
        bool hit = false;
        ResonanceSet set = cached_resonances(pot, c.t_max, finder_options(c), &hit);
        WeylConstants W = weyl_constant(c.n, pot.r0);
        auto rows = counting_table(set, t_grid(c.t_max), W.An);
        std::ofstream out(dir / "counting.csv");
        write_counting_csv(rows, out);
        manifest["certificates"] = certificate_json(set);
        manifest["cache_hit"] = hit;
        manifest["artifacts"] = {"counting.csv"};
        if (c.command == "weyl") {
            WeylReport wr = weyl_report(set, c.n, pot.r0);
            json j = {{"C_hat", wr.C_hat}, {"C_tilde", wr.C_tilde}, {"A_n", wr.An},
                      {"ratio", wr.ratio}, {"t", wr.t},             {"pointwise", wr.pointwise}};
            std::ostringstream os;
            os << std::setprecision(17) << j.dump(2) << '\n';
            write_text(dir / "weyl.json", os.str());
            manifest["artifacts"].push_back("weyl.json");
        }
    } else if (c.command == "indicator") {
        IndicatorTable t = indicator_table(pot.r0, c.n);
        std::ofstream out(dir / "indicator.csv");
        write_indicator_csv(t, out);
        WeylConstants W = weyl_constant(c.n, pot.r0);
        manifest["A_n"] = W.An;
        manifest["artifacts"] = {"indicator.csv"};
    } else if (c.command == "sector") {
        bool hit = false;
        ResonanceSet set = cached_resonances(pot, c.t_max, finder_options(c), &hit);
        SectorReport r = sector_report(set, pot.r0, c.theta1, c.theta2, c.t_max);
        std::ofstream out(dir / "sector.json");
        write_sector_json(r, out);
        manifest["certificates"] = certificate_json(set);
        manifest["cache_hit"] = hit;
        manifest["artifacts"] = {"sector.json"};
    } else if (c.command == "contour-check") {
        bool hit = false;
        ResonanceSet set = cached_resonances(pot, c.t_max, finder_options(c), &hit);
        ContourCheck cc = contour_check(pot, set, c.radius);
        json j = {{"a", cc.a},
                  {"lhs", cc.lhs},
                  {"rhs", cc.rhs},
                  {"boundary_integral", cc.boundary_integral},
                  {"scaled_difference", std::abs(cc.lhs - cc.rhs) / std::pow(cc.a, c.n + 1)},
                  {"extrapolated", cc.extrapolated}};
        std::ostringstream os;
        os << std::setprecision(17) << j.dump(2) << '\n';
        write_text(dir / "contour.json", os.str());
        manifest["certificates"] = certificate_json(set);
        manifest["cache_hit"] = hit;
        manifest["artifacts"] = {"contour.json"};
    } else if (c.command == "selftest") {
        json rep;
        status = selftest(c, rep);
        manifest["selftest"] = rep;
    }

    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    manifest["version"] = kVersion;
    manifest["config_hash"] = hex64(fnv1a(manifest["config"].dump()));
    manifest["wall_time_s"] = wall;
    manifest["workers"] = c.workers > 0 ? c.workers : omp_get_max_threads();
    std::ostringstream os;
    os << std::setprecision(17) << manifest.dump(2) << '\n';
    write_text(dir / "manifest.json", os.str());
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resonances of radial potentials on hyperbolic space"};
    app.require_subcommand(1);
    Config c;
    static const char* names[] = {"resonances", "count", "indicator", "weyl", "sector", "contour-check", "selftest"};
    static const char* help[] = {"enumerate resonances per mode",
                          "counting function table",
                          "indicator function table",
                          "Weyl-law fit",
                          "sector count against the indicator prediction",
                          "averaged count against the log|tau| contour integral",
                          "run the invariant checks"};
    for (int i = 0; i < 7; ++i) {
        auto* sub = app.add_subcommand(names[i], help[i]);
        sub->add_option("--n", c.n, "dimension parameter n (space is H^{n+1})")->capture_default_str();
        sub->add_option("--potential", c.potential, "JSON file, JSON text, or inline type:key=value,...")
            ->capture_default_str();
        sub->add_option("--tmax", c.t_max, "disk radius around n/2")->capture_default_str();
        sub->add_option("--tol", c.tol, "zero residual tolerance")->capture_default_str();
        sub->add_option("--theta1", c.theta1, "sector start angle")->capture_default_str();
        sub->add_option("--theta2", c.theta2, "sector end angle")->capture_default_str();
        sub->add_option("--radius", c.radius, "contour radius for contour-check")->capture_default_str();
        sub->add_option("--out", c.out, "output directory")->capture_default_str();
        sub->add_option("--workers", c.workers, "OpenMP threads (0 = runtime default)")->capture_default_str();
        sub->add_option("--seed", c.seed, "seed for randomized self-test sampling")->capture_default_str();
        sub->callback([&c, i]() { c.command = names[i]; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return e.get_exit_code() == 0 ? code : 2;
    }
    try {
        return run(c);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const hyperres::Error& e) {
        std::cerr << "error [" << e.module() << "]: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
