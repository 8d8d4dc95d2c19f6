#include "spx/pdhg.hpp"

#include <algorithm>
#include <cmath>

#include "spx/rng.hpp"

namespace spx {

double stacked_norm(const std::vector<DualBlock>& blocks, int dim, int iters) {
    Rng rng(0x51ac5edu);
    std::vector<double> v(dim), acc(dim);
    for (auto& x : v) x = rng.gaussian();
    double est = 0.0;
    std::vector<std::vector<double>> outs, ins;
    for (const auto& b : blocks) {
        outs.emplace_back(b.map.dim_out);
        ins.emplace_back(b.map.dim_in);
    }
    for (int k = 0; k < iters; ++k) {
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) return 0.0;
        for (auto& x : v) x /= nrm;
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            blocks[j].map.apply(v.data(), outs[j].data());
            blocks[j].map.adjoint(outs[j].data(), ins[j].data());
            for (int i = 0; i < dim; ++i) acc[i] += ins[j][i];
        }
        est = 0.0;
        for (int i = 0; i < dim; ++i) est += v[i] * acc[i];
        v.swap(acc);
    }
    return std::sqrt(std::max(est, 0.0));
}

PdhgResult pdhg_solve(const std::function<void(std::vector<double>&, double)>& prox_f,
                      std::vector<DualBlock> blocks, std::vector<double> x0,
                      const PdhgSpec& spec) {
    const int n = static_cast<int>(x0.size());
    double tau = spec.tau, sigma = spec.sigma;
    if (tau <= 0.0 || sigma <= 0.0) {
        double nrm = stacked_norm(blocks, n);
        if (nrm <= 0.0) nrm = 1.0;
        // tau sigma ||L||^2 <= 1 with a small safety margin
        tau = sigma = 0.99 / (1.01 * nrm);
    }
    double theta = spec.theta;
    double gamma = spec.accel_gamma;

    PdhgResult res;
    res.x = std::move(x0);
    auto& x = res.x;
    std::vector<double> xbar = x, xprev(n), tmp(n), adj(n);
    std::vector<std::vector<double>> q, lx;
    for (const auto& b : blocks) {
        q.emplace_back(b.map.dim_out, 0.0);
        lx.emplace_back(b.map.dim_out);
    }

    RunReport& rep = res.report;
    rep.solver = "pdhg";
    double obj0 = 0.0;
    if (spec.objective) obj0 = spec.objective(x);

    int k = 0;
    for (; k < spec.max_iters; ++k) {
        // dual ascent on every block
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            blocks[j].map.apply(xbar.data(), lx[j].data());
            for (std::size_t i = 0; i < q[j].size(); ++i) q[j][i] += sigma * lx[j][i];
            blocks[j].prox_conj(q[j], sigma);
        }
        // primal descent
        xprev = x;
        std::fill(tmp.begin(), tmp.end(), 0.0);
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            blocks[j].map.adjoint(q[j].data(), adj.data());
            for (int i = 0; i < n; ++i) tmp[i] += adj[i];
        }
        for (int i = 0; i < n; ++i) x[i] -= tau * tmp[i];
        prox_f(x, tau);

        if (gamma > 0.0) {  // stepsize ramp for strongly convex F
            theta = 1.0 / std::sqrt(1.0 + 2.0 * gamma * tau);
            tau *= theta;
            sigma /= theta;
        }
        double dx = 0.0, nx = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = x[i] - xprev[i];
            dx += d * d;
            nx += x[i] * x[i];
            xbar[i] = x[i] + theta * (x[i] - xprev[i]);
        }
        const double rel = std::sqrt(dx) / std::max(std::sqrt(nx), 1e-30);

        const bool sample = (k % spec.history_stride) == 0;
        if (spec.record_history && sample) {
            if (spec.residual) rep.residual.push_back(spec.residual(x));
            rep.change.push_back(rel);
        }
        if (spec.objective && sample) {
            const double obj = spec.objective(x);
            if (spec.record_history) rep.objective.push_back(obj);
            if (obj > 10.0 * std::max(obj0, 1e-300) && obj > 1e-12) {
                rep.diverged = true;
                rep.note = "objective grew 10x above its initial value";
                ++k;
                break;
            }
        }
        if (spec.stop && spec.stop(x, k)) {
            rep.converged = true;
            ++k;
            break;
        }
        if (rel < spec.tol && k > 0) {
            rep.converged = true;
            ++k;
            break;
        }
    }
    rep.iterations = k;
    rep.params["tau"] = tau;
    rep.params["sigma"] = sigma;
    return res;
}

}  // namespace spx
