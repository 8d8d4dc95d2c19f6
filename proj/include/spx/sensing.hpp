#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "spx/fresnel.hpp"
#include "spx/grid.hpp"
#include "spx/masks.hpp"

namespace spx {

enum class SensingMode { Linear, Intensity };

struct Measurements {
    std::vector<double> y;
    std::optional<double> snr_db;  // realized SNR of injected noise
    std::uint64_t seed = 0;
};

// The composed measurement map. Linear mode applies the mask matrix A.
// Intensity mode measures |B x|^2 with rows B_i = 1^T D_md diag(A_i) D_om;
// since the detector integrates the whole mask plane, B factors through
// g = D_md^T 1 as  B x = A (g .* D_om x), so no FFT per mask is needed.
class SensingOperator {
  public:
    explicit SensingOperator(MaskEnsemble masks, SensingMode mode = SensingMode::Linear);
    SensingOperator(MaskEnsemble masks, FresnelPropagator d_om, FresnelPropagator d_md);

    SensingMode mode() const { return mode_; }
    bool has_diffraction() const { return d_om_.has_value(); }
    int m() const { return masks_.m; }
    int n() const { return masks_.n; }
    const MaskEnsemble& masks() const { return masks_; }

    // Linear mode: A x and A^T y.
    std::vector<double> apply(const std::vector<double>& x) const;
    std::vector<double> apply_adjoint(const std::vector<double>& y) const;

    // The complex linearization B used by the phase module.
    std::vector<cplx> apply_b(const std::vector<cplx>& x) const;
    std::vector<cplx> adjoint_b(const std::vector<cplx>& v) const;

    // ||B_i||^2 per measurement (||A_i||^2 without diffraction).
    const std::vector<double>& row_norms_sq() const;

  private:
    MaskEnsemble masks_;
    SensingMode mode_;
    std::optional<FresnelPropagator> d_om_;
    std::optional<FresnelPropagator> d_md_;
    std::vector<cplx> g_;  // D_md^T 1
    mutable std::vector<double> row_sq_;
};

Measurements forward_measure(const SensingOperator& op, const ImageGrid& image);
Measurements forward_measure(const SensingOperator& op, const ComplexField& image);

// A^T y. Linear mode only; intensity mode uses adjoint_b instead.
ImageGrid adjoint_measure(const SensingOperator& op, const Measurements& y);

// Additive white Gaussian noise rescaled so the realized SNR in dB matches
// snr_db exactly; an infinite snr_db is the no-noise sentinel.
Measurements add_noise(const Measurements& clean, double snr_db, std::uint64_t seed);

}  // namespace spx
