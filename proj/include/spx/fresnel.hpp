#pragma once

#include <memory>
#include <vector>

#include "spx/grid.hpp"

namespace spx {

// Free-space propagation over a fixed distance, discretized with the
// angular-spectrum transfer function on the d1 x d2 grid:
//   D = F^-1 diag(H) F,  H(f) = exp(i 2 pi z sqrt(1/lambda^2 - |f|^2)).
// All grid frequencies must be propagating (|f| < 1/lambda) and the transfer
// phase must be sampled below Nyquist; both are checked at construction, so
// the resulting operator is unitary and forms a semigroup in the distance.
class FresnelPropagator {
  public:
    FresnelPropagator(int d1, int d2, double wavelength, double distance, double pitch);
    ~FresnelPropagator();
    FresnelPropagator(FresnelPropagator&&) noexcept;
    FresnelPropagator& operator=(FresnelPropagator&&) noexcept;
    FresnelPropagator(const FresnelPropagator&) = delete;
    FresnelPropagator& operator=(const FresnelPropagator&) = delete;

    int d1() const;
    int d2() const;
    double distance() const;

    std::vector<cplx> apply(const std::vector<cplx>& x) const;          // D x
    std::vector<cplx> apply_adjoint(const std::vector<cplx>& x) const;  // D^H x = D^-1 x

    // g = D^T 1, the detector-integration vector of this propagation.
    std::vector<cplx> transpose_ones() const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

FresnelPropagator fresnel_propagator(int d1, int d2, double wavelength, double distance,
                                     double pitch);

}  // namespace spx
