#include "hyperres/cache.hpp"
#include "hyperres/version.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace hyperres {

namespace {

using nlohmann::json;

json to_json(const Resonance& r) {
    return {{"re", r.zeta.real()},       {"im", r.zeta.imag()},        {"l", r.l},
            {"order", r.zero_order},     {"mult", r.total_multiplicity}, {"residual", r.residual},
            {"refined", r.refined},      {"near_background", r.near_background},
            {"box", {r.box.x0, r.box.x1, r.box.y0, r.box.y1}}};
}

Resonance from_json(const json& j) {
    Resonance r;
    r.zeta = cplx(j.at("re").get<double>(), j.at("im").get<double>());
    r.l = j.at("l").get<int>();
    r.zero_order = j.at("order").get<int>();
    r.total_multiplicity = j.at("mult").get<long long>();
    r.residual = j.at("residual").get<double>();
    r.refined = j.at("refined").get<bool>();
    r.near_background = j.value("near_background", false);
    const auto& b = j.at("box");
    r.box = {b[0].get<double>(), b[1].get<double>(), b[2].get<double>(), b[3].get<double>()};
    return r;
}

}  // namespace

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string hex64(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string resonance_set_to_json(const ResonanceSet& set) {
    json j;
    j["potential"] = set.potential;
    j["n"] = set.n;
    j["r0"] = set.r0;
    j["t_max"] = set.t_max;
    j["l_max_used"] = set.l_max_used;
    j["background_only"] = set.background_only;
    j["resonances"] = json::array();
    for (const auto& r : set.resonances) j["resonances"].push_back(to_json(r));
    j["eigen_side"] = json::array();
    for (const auto& r : set.eigen_side) j["eigen_side"].push_back(to_json(r));
    j["certificate"] = json::array();
    for (const auto& c : set.certificate) j["certificate"].push_back({{"l", c.l}, {"winding", c.winding}});
    return j.dump();
}

ResonanceSet resonance_set_from_json(const std::string& text) {
    json j = json::parse(text);
    ResonanceSet set;
    set.potential = j.at("potential").get<std::string>();
    set.n = j.at("n").get<int>();
    set.r0 = j.at("r0").get<double>();
    set.t_max = j.at("t_max").get<double>();
    set.l_max_used = j.at("l_max_used").get<int>();
    set.background_only = j.at("background_only").get<bool>();
    for (const auto& r : j.at("resonances")) set.resonances.push_back(from_json(r));
    for (const auto& r : j.at("eigen_side")) set.eigen_side.push_back(from_json(r));
    for (const auto& c : j.at("certificate")) set.certificate.push_back({c.at("l").get<int>(), c.at("winding").get<int>()});
    return set;
}

std::optional<std::string> cache_dir() {
    const char* d = std::getenv("HYPERRES_CACHE");
    if (!d || !*d) return std::nullopt;
    return std::string(d);
}

ResonanceSet cached_resonances(const Potential& pot, double t_max, const FinderOptions& opt, bool* hit) {
    if (hit) *hit = false;
    auto dir = cache_dir();
    if (!dir) return all_resonances(pot, t_max, opt);
    std::ostringstream key;
    key << std::setprecision(17) << "resonances|" << kVersion << "|" << pot.describe() << "|t=" << t_max << "|tol=" << opt.tol
        << "|margin=" << opt.margin;
    std::filesystem::path file = std::filesystem::path(*dir) / ("resonances_" + hex64(fnv1a(key.str())) + ".json");
    if (std::filesystem::exists(file)) {
        std::ifstream in(file);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            ResonanceSet set = resonance_set_from_json(ss.str());
            if (hit) *hit = true;
            return set;
        } catch (const std::exception&) {
            // unreadable entry: recompute and overwrite
        }
    }
    ResonanceSet set = all_resonances(pot, t_max, opt);
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    std::filesystem::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << resonance_set_to_json(set);
    }
    std::filesystem::rename(tmp, file, ec);
    return set;
}

}  // namespace hyperres
