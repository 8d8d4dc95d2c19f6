#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace spx {
struct MaskEnsemble;
}

// Hot inner loops of the toolkit. Every kernel has a serial reference twin
// (serial_*) kept for testing, and an OpenMP version used by the library.
// Parallel kernels assign each output element to exactly one thread and
// accumulate in a fixed serial order, so results are bit-identical to the
// reference for any thread count.
namespace spx::kernels {

// y_i = closed * sum(x) + depth * sum_{j open in mask i} x_j
template <typename T>
void serial_mask_forward(const MaskEnsemble& masks, const T* x, T* y);
template <typename T>
void mask_forward(const MaskEnsemble& masks, const T* x, T* y);

// out_j = closed * sum(y) + depth * sum_{i : mask i open at j} y_i
template <typename T>
void serial_mask_adjoint(const MaskEnsemble& masks, const T* y, T* out);
template <typename T>
void mask_adjoint(const MaskEnsemble& masks, const T* y, T* out);

// Row sums of the squared mask entries, optionally weighted per subpixel:
// out_i = sum_j a_ij^2 * w_j  (w == nullptr means w_j = 1).
void mask_row_sumsq(const MaskEnsemble& masks, const double* w, double* out);

// Forward differences with Neumann (replicate) boundary. Output layout is
// two planes: out[0..n) = d/dcol, out[n..2n) = d/drow.
void serial_grad2d(const double* u, int d1, int d2, double* out);
void grad2d(const double* u, int d1, int d2, double* out);

// Exact negative adjoint of grad2d: <grad u, q> == -<u, div q>.
void serial_div2d(const double* q, int d1, int d2, double* out);
void div2d(const double* q, int d1, int d2, double* out);

}  // namespace spx::kernels
