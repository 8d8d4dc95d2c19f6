#include "spx/fresnel.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <sstream>

namespace spx {

namespace {
// FFTW plan creation is not thread-safe; execution on distinct buffers is.
std::mutex planner_mutex;
}  // namespace

struct FresnelPropagator::Impl {
    int d1 = 0, d2 = 0;
    double wavelength = 0.0, distance = 0.0, pitch = 0.0;
    std::vector<cplx> transfer;  // H in FFT index order
    fftw_plan fwd = nullptr, bwd = nullptr;
    fftw_complex* buf = nullptr;
    mutable std::mutex run_mutex;  // plans share one buffer

    ~Impl() {
        std::lock_guard<std::mutex> lock(planner_mutex);
        if (fwd) fftw_destroy_plan(fwd);
        if (bwd) fftw_destroy_plan(bwd);
        if (buf) fftw_free(buf);
    }
};

FresnelPropagator::FresnelPropagator(int d1, int d2, double wavelength, double distance,
                                     double pitch) {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("FresnelPropagator: bad grid");
    if (wavelength <= 0.0 || pitch <= 0.0)
        throw std::invalid_argument("FresnelPropagator: wavelength and pitch must be > 0");

    // Evanescent guard: the largest grid frequency (corner of the FFT cell)
    // must stay inside the propagating disk |f| < 1/lambda.
    const double fmax1 = 0.5 / pitch, fmax2 = 0.5 / pitch;
    const double fcorner2 = fmax1 * fmax1 + fmax2 * fmax2;
    const double invlam2 = 1.0 / (wavelength * wavelength);
    if (fcorner2 >= invlam2) {
        std::ostringstream msg;
        msg << "FresnelPropagator: pitch " << pitch << " admits evanescent frequencies at "
            << "wavelength " << wavelength << " (need pitch > lambda/sqrt(2) = "
            << wavelength / std::sqrt(2.0) << ")";
        throw ConfigError(msg.str());
    }
    // Transfer-phase sampling guard (aliasing): the phase advance between
    // adjacent frequency samples must be below pi at the corner frequency.
    const double kz_corner = std::sqrt(invlam2 - fcorner2);
    const double dfmin = 1.0 / (std::max(d1, d2) * pitch);
    const double zmax = 0.5 * kz_corner / (fmax1 * dfmin);
    if (std::abs(distance) > zmax) {
        std::ostringstream msg;
        msg << "FresnelPropagator: |distance| " << std::abs(distance)
            << " exceeds the angular-spectrum sampling bound " << zmax
            << " for this grid (enlarge the grid or reduce the distance)";
        throw ConfigError(msg.str());
    }

    impl_ = std::make_unique<Impl>();
    impl_->d1 = d1;
    impl_->d2 = d2;
    impl_->wavelength = wavelength;
    impl_->distance = distance;
    impl_->pitch = pitch;

    const std::size_t n = static_cast<std::size_t>(d1) * d2;
    impl_->transfer.resize(n);
    const double two_pi = 6.283185307179586476925287;
    for (int r = 0; r < d1; ++r) {
        const int kr = r <= d1 / 2 ? r : r - d1;  // FFT index order
        const double fy = kr / (d1 * pitch);
        for (int c = 0; c < d2; ++c) {
            const int kc = c <= d2 / 2 ? c : c - d2;
            const double fx = kc / (d2 * pitch);
            const double kz = std::sqrt(invlam2 - fx * fx - fy * fy);
            impl_->transfer[static_cast<std::size_t>(r) * d2 + c] =
                std::polar(1.0, two_pi * distance * kz);
        }
    }

    std::lock_guard<std::mutex> lock(planner_mutex);
    impl_->buf = fftw_alloc_complex(n);
    impl_->fwd = fftw_plan_dft_2d(d1, d2, impl_->buf, impl_->buf, FFTW_FORWARD, FFTW_ESTIMATE);
    impl_->bwd = fftw_plan_dft_2d(d1, d2, impl_->buf, impl_->buf, FFTW_BACKWARD, FFTW_ESTIMATE);
}

FresnelPropagator::~FresnelPropagator() = default;
FresnelPropagator::FresnelPropagator(FresnelPropagator&&) noexcept = default;
FresnelPropagator& FresnelPropagator::operator=(FresnelPropagator&&) noexcept = default;

int FresnelPropagator::d1() const { return impl_->d1; }
int FresnelPropagator::d2() const { return impl_->d2; }
double FresnelPropagator::distance() const { return impl_->distance; }

namespace {

std::vector<cplx> run_transfer(const FresnelPropagator::Impl& impl, const std::vector<cplx>& x,
                               bool conj_transfer) {
    const std::size_t n = impl.transfer.size();
    if (x.size() != n) throw std::invalid_argument("FresnelPropagator: size mismatch");
    std::vector<cplx> out(n);
    std::lock_guard<std::mutex> lock(impl.run_mutex);
    auto* b = reinterpret_cast<cplx*>(impl.buf);
    for (std::size_t i = 0; i < n; ++i) b[i] = x[i];
    fftw_execute(impl.fwd);
    for (std::size_t i = 0; i < n; ++i)
        b[i] *= conj_transfer ? std::conj(impl.transfer[i]) : impl.transfer[i];
    fftw_execute(impl.bwd);
    const double scale = 1.0 / static_cast<double>(n);  // unnormalized FFTW round trip
    for (std::size_t i = 0; i < n; ++i) out[i] = b[i] * scale;
    return out;
}

}  // namespace

std::vector<cplx> FresnelPropagator::apply(const std::vector<cplx>& x) const {
    return run_transfer(*impl_, x, false);
}

std::vector<cplx> FresnelPropagator::apply_adjoint(const std::vector<cplx>& x) const {
    return run_transfer(*impl_, x, true);
}

std::vector<cplx> FresnelPropagator::transpose_ones() const {
    // D^T u = conj(D^H conj(u)); with u = 1 this costs one round trip.
    const std::size_t n = impl_->transfer.size();
    std::vector<cplx> ones(n, cplx(1.0, 0.0));
    std::vector<cplx> out = apply_adjoint(ones);
    for (auto& v : out) v = std::conj(v);
    return out;
}

FresnelPropagator fresnel_propagator(int d1, int d2, double wavelength, double distance,
                                     double pitch) {
    return FresnelPropagator(d1, d2, wavelength, distance, pitch);
}

}  // namespace spx
