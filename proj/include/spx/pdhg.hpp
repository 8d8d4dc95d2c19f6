#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "spx/linop.hpp"
#include "spx/report.hpp"

namespace spx {

// One dual block G_j(L_j x) of the saddle-point problem
//   min_x F(x) + sum_j G_j(L_j x).
struct DualBlock {
    LinearMap map;
    std::function<void(std::vector<double>&, double)> prox_conj;  // in-place prox_{sigma G*}
};

struct PdhgSpec {
    int max_iters = 2000;
    double tol = 1e-6;  // stop on relative iterate change
    double tau = 0.0;   // 0 = derive from the stacked operator norm
    double sigma = 0.0;
    double theta = 1.0;
    double accel_gamma = 0.0;  // >0: F is gamma-strongly convex, use stepsize ramp
    bool record_history = true;
    int history_stride = 1;
    std::function<double(const std::vector<double>&)> objective;  // optional, enables guard
    std::function<double(const std::vector<double>&)> residual;   // optional
    // Optional custom stopping test, called every iteration with (x, iter).
    std::function<bool(const std::vector<double>&, int)> stop;
};

struct PdhgResult {
    std::vector<double> x;
    RunReport report;
};

// Chambolle-Pock primal-dual iteration with extrapolation on the primal
// variable. Aborts with the divergence flag set when the objective grows
// tenfold above its initial value.
PdhgResult pdhg_solve(const std::function<void(std::vector<double>&, double)>& prox_f,
                      std::vector<DualBlock> blocks, std::vector<double> x0,
                      const PdhgSpec& spec);

// Norm of the stacked operator [L_1; ...; L_k] by power iteration.
double stacked_norm(const std::vector<DualBlock>& blocks, int dim, int iters = 60);

}  // namespace spx
