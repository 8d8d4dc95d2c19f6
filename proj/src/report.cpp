#include "spx/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace spx {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string RunReport::to_json(bool include_timing) const {
    nlohmann::ordered_json j;
    j["solver"] = solver;
    j["seed"] = seed;
    j["iterations"] = iterations;
    j["converged"] = converged;
    j["diverged"] = diverged;
    if (floored) j["floored"] = true;
    if (!note.empty()) j["note"] = note;
    j["params"] = params;
    j["metrics"] = metrics;
    if (!objective.empty()) j["final_objective"] = objective.back();
    if (!residual.empty()) j["final_residual"] = residual.back();
    if (include_timing) j["wall_seconds"] = wall_seconds;
    return j.dump(2) + "\n";
}

std::string RunReport::history_csv() const {
    std::ostringstream out;
    out << "iter,objective,residual,change\n";
    const std::size_t rows = std::max({objective.size(), residual.size(), change.size()});
    for (std::size_t k = 0; k < rows; ++k) {
        out << k;
        out << ',' << (k < objective.size() ? fmt(objective[k]) : "");
        out << ',' << (k < residual.size() ? fmt(residual[k]) : "");
        out << ',' << (k < change.size() ? fmt(change[k]) : "");
        out << '\n';
    }
    return out.str();
}

}  // namespace spx
