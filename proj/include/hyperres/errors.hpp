#pragma once

#include <stdexcept>
#include <string>

namespace hyperres {

// Every error carries the module that raised it so the CLI can report provenance.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(what), module_(std::move(module)) {}
    const std::string& module() const { return module_; }

private:
    std::string module_;
};

struct GammaPole : Error {
    explicit GammaPole(const std::string& w) : Error("special_functions", "gamma pole: " + w) {}
};
struct SingularArgument : Error {
    explicit SingularArgument(const std::string& w)
        : Error("special_functions", "singular argument: " + w) {}
};
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& w)
        : Error("special_functions", "precision exhausted: " + w) {}
};
struct BranchPoint : Error {
    explicit BranchPoint(const std::string& w) : Error("phase_geometry", "branch point: " + w) {}
};
struct BracketFailure : Error {
    explicit BracketFailure(const std::string& w)
        : Error("phase_geometry", "bracket failure: " + w) {}
};
struct MatchingFailure : Error {
    MatchingFailure(const std::string& w, double r_match, double condition)
        : Error("mode_solver", "matching failure: " + w), r_match(r_match), condition(condition) {}
    double r_match;
    double condition;
};
struct SeriesDivergent : Error {
    explicit SeriesDivergent(const std::string& w)
        : Error("mode_solver", "series divergent at this k: " + w) {}
};
struct LatticeSingularity : Error {
    explicit LatticeSingularity(const std::string& w)
        : Error("mode_solver", "too close to lattice singularity: " + w) {}
};
struct BoundaryZero : Error {
    explicit BoundaryZero(const std::string& w)
        : Error("resonance_finder", "boundary zero suspected: " + w) {}
};
struct CertificateFailure : Error {
    explicit CertificateFailure(const std::string& w)
        : Error("resonance_finder", "certificate failure: " + w) {}
};
struct InsufficientData : Error {
    explicit InsufficientData(const std::string& w)
        : Error("counting", "insufficient data: " + w) {}
};
struct NonDifferentiableAngle : Error {
    explicit NonDifferentiableAngle(const std::string& w)
        : Error("counting", "non-differentiable angle: " + w) {}
};
struct OscillatoryFailure : Error {
    explicit OscillatoryFailure(const std::string& w)
        : Error("laplace_oracle", "oscillatory failure: " + w) {}
};

}  // namespace hyperres
