#pragma once

#include <functional>
#include <vector>

#include "spx/sensing.hpp"

namespace spx {

// Matrix-free linear operator between flat real vectors, with a norm bound
// used by the primal-dual step condition.
struct LinearMap {
    int dim_in = 0;
    int dim_out = 0;
    std::function<void(const double*, double*)> apply;
    std::function<void(const double*, double*)> adjoint;
    double norm_estimate = 0.0;  // >= true operator norm (power method * 1.01)

    std::vector<double> operator()(const std::vector<double>& x) const {
        std::vector<double> out(dim_out);
        apply(x.data(), out.data());
        return out;
    }
    std::vector<double> adj(const std::vector<double>& y) const {
        std::vector<double> out(dim_in);
        adjoint(y.data(), out.data());
        return out;
    }
};

// Largest singular value by power iteration on L^T L, deterministic start.
double power_method_norm(const LinearMap& map, int iters = 100, std::uint64_t seed = 0x9e3779b9);

LinearMap make_identity_map(int n);
// Forward-difference gradient, planes layout (n x 2); norm bound sqrt(8).
LinearMap make_grad_map(int d1, int d2);
// Captures op by reference; the operator must outlive the map.
LinearMap make_sensing_map(const SensingOperator& op);
// Dense row-major matrix map (test oracles and small problems).
LinearMap make_dense_map(int rows, int cols, std::vector<double> entries);

}  // namespace spx
