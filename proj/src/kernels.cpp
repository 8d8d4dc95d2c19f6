#include "spx/kernels.hpp"

#include "spx/masks.hpp"

namespace spx::kernels {

namespace {

// Sum of x over the open subpixels of mask i, in fixed subpixel order.
template <typename T>
T open_sum_dense(const MaskEnsemble& masks, int i, const T* x) {
    const std::uint8_t* row = masks.bits.data() + static_cast<std::size_t>(i) * masks.n;
    T acc{};
    for (int j = 0; j < masks.n; ++j)
        if (row[j]) acc += x[j];
    return acc;
}

template <typename T>
T open_sum_circulant(const MaskEnsemble& masks, int i, const T* x) {
    const int d1 = masks.d1, d2 = masks.d2;
    const int dr = masks.shifts[i].first, dc = masks.shifts[i].second;
    T acc{};
    for (int kr = 0; kr < d1; ++kr) {
        const int r = kr + dr >= d1 ? kr + dr - d1 : kr + dr;
        for (int kc = 0; kc < d2; ++kc) {
            if (masks.kernel.at(kr, kc) == 0.0) continue;
            const int c = kc + dc >= d2 ? kc + dc - d2 : kc + dc;
            acc += x[static_cast<std::size_t>(r) * d2 + c];
        }
    }
    return acc;
}

template <typename T>
void forward_impl(const MaskEnsemble& masks, const T* x, T* y, bool parallel) {
    T total{};
    for (int j = 0; j < masks.n; ++j) total += x[j];
    const double depth = masks.depth();
    const double closed = masks.closed_value;
    const bool circ = masks.circulant();
#pragma omp parallel for schedule(static) if (parallel && masks.m > 63)
    for (int i = 0; i < masks.m; ++i) {
        const T open = circ ? open_sum_circulant(masks, i, x) : open_sum_dense(masks, i, x);
        y[i] = closed * total + depth * open;
    }
}

// Gather form of the adjoint: each output subpixel sums its masks in fixed
// order, so the parallel loop is race-free and bit-stable.
template <typename T>
void adjoint_impl(const MaskEnsemble& masks, const T* y, T* out, bool parallel) {
    T total{};
    for (int i = 0; i < masks.m; ++i) total += y[i];
    const double depth = masks.depth();
    const double closed = masks.closed_value;
    if (!masks.circulant()) {
#pragma omp parallel for schedule(static) if (parallel && masks.n > 63)
        for (int j = 0; j < masks.n; ++j) {
            T acc{};
            for (int i = 0; i < masks.m; ++i)
                if (masks.bits[static_cast<std::size_t>(i) * masks.n + j]) acc += y[i];
            out[j] = closed * total + depth * acc;
        }
    } else {
        const int d1 = masks.d1, d2 = masks.d2;
#pragma omp parallel for schedule(static) if (parallel && masks.n > 63)
        for (int j = 0; j < masks.n; ++j) {
            const int r = j / d2, c = j % d2;
            T acc{};
            for (int i = 0; i < masks.m; ++i) {
                int kr = r - masks.shifts[i].first;
                int kc = c - masks.shifts[i].second;
                if (kr < 0) kr += d1;
                if (kc < 0) kc += d2;
                if (masks.kernel.at(kr, kc) != 0.0) acc += y[i];
            }
            out[j] = closed * total + depth * acc;
        }
    }
}

}  // namespace

template <typename T>
void serial_mask_forward(const MaskEnsemble& masks, const T* x, T* y) {
    forward_impl(masks, x, y, false);
}
template <typename T>
void mask_forward(const MaskEnsemble& masks, const T* x, T* y) {
    forward_impl(masks, x, y, true);
}
template <typename T>
void serial_mask_adjoint(const MaskEnsemble& masks, const T* y, T* out) {
    adjoint_impl(masks, y, out, false);
}
template <typename T>
void mask_adjoint(const MaskEnsemble& masks, const T* y, T* out) {
    adjoint_impl(masks, y, out, true);
}

template void serial_mask_forward<double>(const MaskEnsemble&, const double*, double*);
template void serial_mask_forward<std::complex<double>>(const MaskEnsemble&,
                                                        const std::complex<double>*,
                                                        std::complex<double>*);
template void mask_forward<double>(const MaskEnsemble&, const double*, double*);
template void mask_forward<std::complex<double>>(const MaskEnsemble&,
                                                 const std::complex<double>*,
                                                 std::complex<double>*);
template void serial_mask_adjoint<double>(const MaskEnsemble&, const double*, double*);
template void serial_mask_adjoint<std::complex<double>>(const MaskEnsemble&,
                                                        const std::complex<double>*,
                                                        std::complex<double>*);
template void mask_adjoint<double>(const MaskEnsemble&, const double*, double*);
template void mask_adjoint<std::complex<double>>(const MaskEnsemble&,
                                                 const std::complex<double>*,
                                                 std::complex<double>*);

void mask_row_sumsq(const MaskEnsemble& masks, const double* w, double* out) {
    double total = 0.0;
    for (int j = 0; j < masks.n; ++j) total += w ? w[j] : 1.0;
    const double c2 = masks.closed_value * masks.closed_value;
    const double o2 = masks.open_value * masks.open_value;
#pragma omp parallel for schedule(static) if (masks.m > 63)
    for (int i = 0; i < masks.m; ++i) {
        double open = 0.0;
        for (int j = 0; j < masks.n; ++j)
            if (masks.bit(i, j)) open += w ? w[j] : 1.0;
        out[i] = c2 * (total - open) + o2 * open;
    }
}

namespace {

void grad2d_impl(const double* u, int d1, int d2, double* out, bool parallel) {
    const std::size_t n = static_cast<std::size_t>(d1) * d2;
#pragma omp parallel for schedule(static) if (parallel && n > 4095)
    for (int r = 0; r < d1; ++r) {
        for (int c = 0; c < d2; ++c) {
            const std::size_t j = static_cast<std::size_t>(r) * d2 + c;
            out[j] = (c + 1 < d2) ? u[j + 1] - u[j] : 0.0;        // d/dcol
            out[n + j] = (r + 1 < d1) ? u[j + d2] - u[j] : 0.0;   // d/drow
        }
    }
}

void div2d_impl(const double* q, int d1, int d2, double* out, bool parallel) {
    const std::size_t n = static_cast<std::size_t>(d1) * d2;
    const double* qx = q;
    const double* qy = q + n;
#pragma omp parallel for schedule(static) if (parallel && n > 4095)
    for (int r = 0; r < d1; ++r) {
        for (int c = 0; c < d2; ++c) {
            const std::size_t j = static_cast<std::size_t>(r) * d2 + c;
            double acc = 0.0;
            if (c + 1 < d2) acc -= qx[j];
            if (c > 0) acc += qx[j - 1];
            if (r + 1 < d1) acc -= qy[j];
            if (r > 0) acc += qy[j - d2];
            // div = -grad^T, assembled directly from the transposed stencil
            out[j] = -acc;
        }
    }
}

}  // namespace

void serial_grad2d(const double* u, int d1, int d2, double* out) { grad2d_impl(u, d1, d2, out, false); }
void grad2d(const double* u, int d1, int d2, double* out) { grad2d_impl(u, d1, d2, out, true); }
void serial_div2d(const double* q, int d1, int d2, double* out) { div2d_impl(q, d1, d2, out, false); }
void div2d(const double* q, int d1, int d2, double* out) { div2d_impl(q, d1, d2, out, true); }

}  // namespace spx::kernels
