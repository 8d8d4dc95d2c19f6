#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spx/pdhg.hpp"

namespace spx {

enum class RegKind { Tikhonov, L1, TV, TGV };

RegKind reg_kind_from_string(const std::string& name);
std::string to_string(RegKind kind);

struct SolverSpec {
    RegKind kind = RegKind::TV;
    double lambda = 1e-2;
    double beta = 2.0;  // TGV second-order weight
    bool isotropic = true;
    bool nonneg = false;
    int max_iters = 2000;
    double tol = 1e-6;
    double tau = 0.0, sigma = 0.0;  // 0 = auto
    int history_stride = 1;
};

// Geometry plus measurement data shared by all reconstruction solvers.
struct LinearProblem {
    LinearMap A;
    int d1 = 0, d2 = 0;
    std::vector<double> y;
};

LinearProblem make_problem(const SensingOperator& op, std::vector<double> y);

// min 1/2 ||y - A x||^2 + lambda R(Phi x), as selected by spec.kind.
std::pair<ImageGrid, RunReport> solve_penalized(const LinearProblem& prob,
                                                const SolverSpec& spec);

// min_{x >= 0} ||y - A x||^2, stopped on the projected KKT residual.
struct NnlsSpec {
    int max_iters = 20000;
    double kkt_tol = 1e-8;  // on ||min(x, grad)||_inf, relative to data scale
    double tol = 0.0;       // iterate-change stop disabled by default
};
std::pair<ImageGrid, RunReport> solve_nnls(const LinearProblem& prob, const NnlsSpec& spec = {});

// Bregman / augmented Lagrangian outer loop around solve_penalized, with
// lambda_tilde = K * lambda. Returns all outer iterates.
std::pair<std::vector<ImageGrid>, RunReport> bregman_iterate(const LinearProblem& prob,
                                                             const SolverSpec& base,
                                                             int outer_iters);

// Objective value of the penalized model at x (used by tests and reports).
double penalized_objective(const LinearProblem& prob, const SolverSpec& spec,
                           const std::vector<double>& x, const std::vector<double>& w = {});

// TV denoising  min 1/2||x - f||^2 + lambda TV(x); shared by the Retinex and
// phase modules as their proximal backward step.
ImageGrid tv_denoise(const ImageGrid& f, double lambda, bool isotropic = true,
                     int max_iters = 300, double tol = 1e-7);

}  // namespace spx
