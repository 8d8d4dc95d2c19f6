#include "spx/sensing.hpp"

#include <cmath>

#include "spx/kernels.hpp"
#include "spx/rng.hpp"

namespace spx {

SensingOperator::SensingOperator(MaskEnsemble masks, SensingMode mode)
    : masks_(std::move(masks)), mode_(mode) {
    masks_.validate();
}

SensingOperator::SensingOperator(MaskEnsemble masks, FresnelPropagator d_om,
                                 FresnelPropagator d_md)
    : masks_(std::move(masks)), mode_(SensingMode::Intensity) {
    masks_.validate();
    if (d_om.d1() != masks_.d1 || d_om.d2() != masks_.d2 || d_md.d1() != masks_.d1 ||
        d_md.d2() != masks_.d2)
        throw std::invalid_argument("SensingOperator: propagator grid mismatch");
    g_ = d_md.transpose_ones();
    d_om_.emplace(std::move(d_om));
    d_md_.emplace(std::move(d_md));
}

std::vector<double> SensingOperator::apply(const std::vector<double>& x) const {
    if (mode_ != SensingMode::Linear)
        throw std::invalid_argument("SensingOperator::apply: linear mode only");
    if (static_cast<int>(x.size()) != masks_.n)
        throw std::invalid_argument("SensingOperator::apply: size mismatch");
    std::vector<double> y(masks_.m);
    kernels::mask_forward(masks_, x.data(), y.data());
    return y;
}

std::vector<double> SensingOperator::apply_adjoint(const std::vector<double>& y) const {
    if (mode_ != SensingMode::Linear)
        throw std::invalid_argument("SensingOperator::apply_adjoint: linear mode only");
    if (static_cast<int>(y.size()) != masks_.m)
        throw std::invalid_argument("SensingOperator::apply_adjoint: size mismatch");
    std::vector<double> out(masks_.n);
    kernels::mask_adjoint(masks_, y.data(), out.data());
    return out;
}

std::vector<cplx> SensingOperator::apply_b(const std::vector<cplx>& x) const {
    if (static_cast<int>(x.size()) != masks_.n)
        throw std::invalid_argument("SensingOperator::apply_b: size mismatch");
    std::vector<cplx> z(masks_.m);
    if (!has_diffraction()) {
        kernels::mask_forward(masks_, x.data(), z.data());
        return z;
    }
    std::vector<cplx> w = d_om_->apply(x);
    for (std::size_t j = 0; j < w.size(); ++j) w[j] *= g_[j];
    kernels::mask_forward(masks_, w.data(), z.data());
    return z;
}

std::vector<cplx> SensingOperator::adjoint_b(const std::vector<cplx>& v) const {
    if (static_cast<int>(v.size()) != masks_.m)
        throw std::invalid_argument("SensingOperator::adjoint_b: size mismatch");
    std::vector<cplx> t(masks_.n);
    kernels::mask_adjoint(masks_, v.data(), t.data());
    if (!has_diffraction()) return t;
    for (std::size_t j = 0; j < t.size(); ++j) t[j] *= std::conj(g_[j]);
    return d_om_->apply_adjoint(t);
}

const std::vector<double>& SensingOperator::row_norms_sq() const {
    if (row_sq_.empty()) {
        row_sq_.resize(masks_.m);
        if (has_diffraction()) {
            std::vector<double> w(masks_.n);
            for (int j = 0; j < masks_.n; ++j) w[j] = std::norm(g_[j]);
            kernels::mask_row_sumsq(masks_, w.data(), row_sq_.data());
        } else {
            kernels::mask_row_sumsq(masks_, nullptr, row_sq_.data());
        }
    }
    return row_sq_;
}

Measurements forward_measure(const SensingOperator& op, const ImageGrid& image) {
    if (static_cast<int>(image.size()) != op.n())
        throw std::invalid_argument("forward_measure: image size mismatch");
    Measurements out;
    if (op.mode() == SensingMode::Linear) {
        out.y = op.apply(image.values);
    } else {
        std::vector<cplx> z = op.apply_b(promote(image).values);
        out.y.resize(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) out.y[i] = std::norm(z[i]);
    }
    return out;
}

Measurements forward_measure(const SensingOperator& op, const ComplexField& image) {
    if (op.mode() != SensingMode::Intensity)
        throw std::invalid_argument("forward_measure: complex input requires intensity mode");
    if (static_cast<int>(image.size()) != op.n())
        throw std::invalid_argument("forward_measure: image size mismatch");
    Measurements out;
    std::vector<cplx> z = op.apply_b(image.values);
    out.y.resize(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) out.y[i] = std::norm(z[i]);
    return out;
}

ImageGrid adjoint_measure(const SensingOperator& op, const Measurements& meas) {
    if (op.mode() != SensingMode::Linear)
        throw std::invalid_argument("adjoint_measure: unsupported in intensity mode");
    ImageGrid out(op.masks().d1, op.masks().d2);
    out.values = op.apply_adjoint(meas.y);
    return out;
}

Measurements add_noise(const Measurements& clean, double snr_db, std::uint64_t seed) {
    if (std::isinf(snr_db)) {
        Measurements out = clean;
        out.snr_db = snr_db;
        out.seed = seed;
        return out;
    }
    double ynorm = 0.0;
    for (double v : clean.y) ynorm += v * v;
    ynorm = std::sqrt(ynorm);
    if (ynorm <= 0.0) throw std::invalid_argument("add_noise: ||y|| must be > 0");
    Rng rng(seed);
    std::vector<double> e(clean.y.size());
    double enorm = 0.0;
    for (auto& v : e) {
        v = rng.gaussian();
        enorm += v * v;
    }
    enorm = std::sqrt(enorm);
    // Exact rescaling of the drawn noise: realized SNR == snr_db.
    const double scale = ynorm / enorm * std::pow(10.0, -snr_db / 20.0);
    Measurements out = clean;
    for (std::size_t i = 0; i < e.size(); ++i) out.y[i] += scale * e[i];
    out.snr_db = snr_db;
    out.seed = seed;
    return out;
}

}  // namespace spx
