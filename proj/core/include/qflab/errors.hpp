#pragma once

#include <stdexcept>
#include <string>

namespace qf {

/// Violated caller contract (bad index, point outside domain, rank
/// hypothesis not met, malformed input). CLI exit code 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input family is not in general position for the requested computation
/// (corrector divergence, tangential crossing, curves too close). The
/// caller is expected to perturb or resample. CLI exit code 3.
class non_generic_error : public std::runtime_error {
public:
    explicit non_generic_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal numerical failure that should be unreachable for sane input
/// (eigensolver sweep cap, vertex cap).
class numerics_error : public std::runtime_error {
public:
    explicit numerics_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qf
