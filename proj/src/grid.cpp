#include "spx/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spx {

double ImageGrid::min() const {
    return *std::min_element(values.begin(), values.end());
}

double ImageGrid::max() const {
    return *std::max_element(values.begin(), values.end());
}

double ImageGrid::sum() const {
    return std::accumulate(values.begin(), values.end(), 0.0);
}

void ImageGrid::validate() const {
    if (d1 < 1 || d2 < 1) throw std::invalid_argument("ImageGrid: d1,d2 must be >= 1");
    if (values.size() != static_cast<std::size_t>(d1) * d2)
        throw std::invalid_argument("ImageGrid: values length != d1*d2");
    if (nonneg && min() < 0.0)
        throw std::invalid_argument("ImageGrid: nonneg flag set but values contain negatives");
}

ImageGrid amplitude_of(const ComplexField& f) {
    ImageGrid out(f.d1, f.d2, 0.0, true);
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = std::abs(f.values[i]);
    return out;
}

ImageGrid phase_of(const ComplexField& f) {
    ImageGrid out(f.d1, f.d2);
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = std::arg(f.values[i]);
    return out;
}

ComplexField from_amplitude_phase(const ImageGrid& amp, const ImageGrid& phase) {
    if (amp.d1 != phase.d1 || amp.d2 != phase.d2)
        throw std::invalid_argument("from_amplitude_phase: dimension mismatch");
    ComplexField out(amp.d1, amp.d2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = std::polar(amp.values[i], phase.values[i]);
    return out;
}

ComplexField promote(const ImageGrid& g) {
    ComplexField out(g.d1, g.d2);
    for (std::size_t i = 0; i < out.size(); ++i) out.values[i] = cplx(g.values[i], 0.0);
    return out;
}

}  // namespace spx
