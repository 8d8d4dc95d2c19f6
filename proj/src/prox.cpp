#include "spx/prox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spx {

namespace proxops {

void shrink_l1(std::vector<double>& v, double thresh) {
    for (auto& x : v) {
        if (x > thresh)
            x -= thresh;
        else if (x < -thresh)
            x += thresh;
        else
            x = 0.0;
    }
}

void shrink_l21(std::vector<double>& v, int comps, double thresh) {
    const std::size_t rows = v.size() / comps;
    for (std::size_t i = 0; i < rows; ++i) {
        double sq = 0.0;
        for (int k = 0; k < comps; ++k) sq += v[k * rows + i] * v[k * rows + i];
        const double nrm = std::sqrt(sq);
        // ||row|| = 0 keeps the zero row (limit value of the scaling factor)
        const double scale = nrm > thresh ? 1.0 - thresh / nrm : 0.0;
        for (int k = 0; k < comps; ++k) v[k * rows + i] *= scale;
    }
}

void clamp_nonneg(std::vector<double>& v) {
    for (auto& x : v) x = std::max(x, 0.0);
}

void clamp_box01(std::vector<double>& v) {
    for (auto& x : v) x = std::clamp(x, 0.0, 1.0);
}

void conj_data_l2(std::vector<double>& v, double sigma, const std::vector<double>& y) {
    const double inv = 1.0 / (1.0 + sigma);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (v[i] - sigma * y[i]) * inv;
}

void conj_l1(std::vector<double>& v, double w) {
    for (auto& x : v) x = std::clamp(x, -w, w);
}

void conj_l21(std::vector<double>& v, int comps, double w) {
    const std::size_t rows = v.size() / comps;
    for (std::size_t i = 0; i < rows; ++i) {
        double sq = 0.0;
        for (int k = 0; k < comps; ++k) sq += v[k * rows + i] * v[k * rows + i];
        const double nrm = std::sqrt(sq);
        if (nrm > w) {
            const double scale = w / nrm;
            for (int k = 0; k < comps; ++k) v[k * rows + i] *= scale;
        }
    }
}

void conj_nonneg(std::vector<double>& v) {
    for (auto& x : v) x = std::min(x, 0.0);
}

}  // namespace proxops

std::vector<double> prox_shrink(std::vector<double> v, double step, ShrinkMode mode, int comps) {
    if (mode == ShrinkMode::Anisotropic)
        proxops::shrink_l1(v, step);
    else
        proxops::shrink_l21(v, comps, step);
    return v;
}

void ProxOperator::evaluate_inplace(std::vector<double>& v, double step) const {
    const double s = step * weight;
    switch (kind) {
        case Kind::Zero: return;
        case Kind::L1: proxops::shrink_l1(v, s); return;
        case Kind::L21: proxops::shrink_l21(v, comps, s); return;
        case Kind::SqL2: {
            // h = (weight/2)||x||^2
            const double scale = 1.0 / (1.0 + s);
            for (auto& x : v) x *= scale;
            return;
        }
        case Kind::Nonneg: proxops::clamp_nonneg(v); return;
        case Kind::Box01: proxops::clamp_box01(v); return;
    }
    throw std::invalid_argument("ProxOperator: unknown kind");
}

}  // namespace spx
