#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "spx/errors.hpp"

namespace spx {

using cplx = std::complex<double>;

// Real-valued d1 x d2 raster, row-major. Used for images p, targets t,
// beams l and the log-domain fields of the calibration solvers.
struct ImageGrid {
    int d1 = 0;
    int d2 = 0;
    std::vector<double> values;  // length d1*d2
    bool nonneg = false;

    ImageGrid() = default;
    ImageGrid(int rows, int cols, double fill = 0.0, bool nonneg_flag = false)
        : d1(rows), d2(cols), values(static_cast<std::size_t>(rows) * cols, fill),
          nonneg(nonneg_flag) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("ImageGrid: d1,d2 must be >= 1");
    }

    std::size_t size() const { return values.size(); }
    double& at(int r, int c) { return values[static_cast<std::size_t>(r) * d2 + c]; }
    double at(int r, int c) const { return values[static_cast<std::size_t>(r) * d2 + c]; }

    double min() const;
    double max() const;
    double sum() const;

    // Throws if the declared invariants are violated.
    void validate() const;
};

// Complex-valued raster for diffracted wavefields and complex reconstructions.
struct ComplexField {
    int d1 = 0;
    int d2 = 0;
    std::vector<cplx> values;

    ComplexField() = default;
    ComplexField(int rows, int cols, cplx fill = {0.0, 0.0})
        : d1(rows), d2(cols), values(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("ComplexField: d1,d2 must be >= 1");
    }

    std::size_t size() const { return values.size(); }
    cplx& at(int r, int c) { return values[static_cast<std::size_t>(r) * d2 + c]; }
    cplx at(int r, int c) const { return values[static_cast<std::size_t>(r) * d2 + c]; }
};

ImageGrid amplitude_of(const ComplexField& f);
ImageGrid phase_of(const ComplexField& f);
ComplexField from_amplitude_phase(const ImageGrid& amp, const ImageGrid& phase);
ComplexField promote(const ImageGrid& g);

}  // namespace spx
