#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hyperres/resonance_finder.hpp"

namespace hyperres {

std::uint64_t fnv1a(const std::string& s);
std::string hex64(std::uint64_t h);

std::string resonance_set_to_json(const ResonanceSet& set);
ResonanceSet resonance_set_from_json(const std::string& text);

/// Directory named by HYPERRES_CACHE, if set and non-empty.
std::optional<std::string> cache_dir();

/// all_resonances behind an on-disk cache keyed by potential, t_max and tolerance.
/// Without HYPERRES_CACHE this is a plain call.
ResonanceSet cached_resonances(const Potential& pot, double t_max, const FinderOptions& opt = {},
                               bool* hit = nullptr);

}  // namespace hyperres
