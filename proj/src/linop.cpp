#include "spx/linop.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "spx/kernels.hpp"
#include "spx/rng.hpp"

namespace spx {

double power_method_norm(const LinearMap& map, int iters, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> v(map.dim_in), tmp_out(map.dim_out), tmp_in(map.dim_in);
    double nrm = 0.0;
    for (auto& x : v) x = rng.gaussian();
    double est = 0.0;
    for (int k = 0; k < iters; ++k) {
        nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) return 0.0;
        for (auto& x : v) x /= nrm;
        map.apply(v.data(), tmp_out.data());
        map.adjoint(tmp_out.data(), tmp_in.data());
        est = 0.0;
        for (int i = 0; i < map.dim_in; ++i) est += v[i] * tmp_in[i];  // Rayleigh for L^T L
        v.swap(tmp_in);
    }
    return std::sqrt(std::max(est, 0.0));
}

LinearMap make_identity_map(int n) {
    LinearMap map;
    map.dim_in = map.dim_out = n;
    map.apply = [n](const double* x, double* out) { std::copy(x, x + n, out); };
    map.adjoint = map.apply;
    map.norm_estimate = 1.0;
    return map;
}

LinearMap make_grad_map(int d1, int d2) {
    LinearMap map;
    map.dim_in = d1 * d2;
    map.dim_out = 2 * d1 * d2;
    map.apply = [d1, d2](const double* x, double* out) { kernels::grad2d(x, d1, d2, out); };
    map.adjoint = [d1, d2](const double* q, double* out) {
        kernels::div2d(q, d1, d2, out);
        const int n = d1 * d2;
        for (int i = 0; i < n; ++i) out[i] = -out[i];  // grad^T = -div
    };
    map.norm_estimate = std::sqrt(8.0);  // classical bound for forward differences
    return map;
}

LinearMap make_sensing_map(const SensingOperator& op) {
    LinearMap map;
    map.dim_in = op.n();
    map.dim_out = op.m();
    map.apply = [&op](const double* x, double* out) {
        kernels::mask_forward(op.masks(), x, out);
    };
    map.adjoint = [&op](const double* y, double* out) {
        kernels::mask_adjoint(op.masks(), y, out);
    };
    map.norm_estimate = 1.01 * power_method_norm(map, 80);
    return map;
}

LinearMap make_dense_map(int rows, int cols, std::vector<double> entries) {
    if (entries.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("make_dense_map: entry count mismatch");
    auto mat = std::make_shared<std::vector<double>>(std::move(entries));
    LinearMap map;
    map.dim_in = cols;
    map.dim_out = rows;
    map.apply = [mat, rows, cols](const double* x, double* out) {
        for (int i = 0; i < rows; ++i) {
            double acc = 0.0;
            for (int j = 0; j < cols; ++j) acc += (*mat)[static_cast<std::size_t>(i) * cols + j] * x[j];
            out[i] = acc;
        }
    };
    map.adjoint = [mat, rows, cols](const double* y, double* out) {
        for (int j = 0; j < cols; ++j) out[j] = 0.0;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                out[j] += (*mat)[static_cast<std::size_t>(i) * cols + j] * y[i];
    };
    map.norm_estimate = 1.01 * power_method_norm(map, 200);
    return map;
}

}  // namespace spx
