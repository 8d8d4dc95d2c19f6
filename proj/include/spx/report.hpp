#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spx/grid.hpp"

namespace spx {

// Solver telemetry for one run. Wall time is kept for console reporting but
// excluded from serialized artifacts unless asked for, so that artifact
// trees are byte-reproducible.
struct RunReport {
    std::string solver;
    std::vector<double> objective;
    std::vector<double> residual;  // data residual ||y - A x_k|| when defined
    std::vector<double> change;    // relative iterate change
    ImageGrid image;               // final primary iterate
    std::map<std::string, double> params;
    std::map<std::string, double> metrics;
    std::uint64_t seed = 0;
    int iterations = 0;
    bool converged = false;
    bool diverged = false;
    bool floored = false;  // log-domain floor was applied somewhere
    std::string note;
    double wall_seconds = 0.0;

    std::string to_json(bool include_timing = false) const;
    // CSV iterate history: iter, objective, residual, change.
    std::string history_csv() const;
};

}  // namespace spx
