#pragma once

#include <stdexcept>
#include <string>

namespace spx {

// Invalid experiment configuration (bad file, bad field, geometry that
// cannot be discretized). CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver left its stability region (divergence guard) or failed to reach
// its stopping test. CLI maps this to exit code 3 in single-run mode.
struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

// File system / format failures. CLI maps this to exit code 4.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace spx
