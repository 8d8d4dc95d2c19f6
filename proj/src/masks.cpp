#include "spx/masks.hpp"

#include <algorithm>
#include <set>

#include "spx/rng.hpp"

namespace spx {

std::vector<double> MaskEnsemble::dense_row(int i) const {
    std::vector<double> row(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row[j] = entry(i, j);
    return row;
}

void MaskEnsemble::validate() const {
    if (m < 1 || n < 1) throw std::invalid_argument("MaskEnsemble: m,n must be >= 1");
    if (n != d1 * d2) throw std::invalid_argument("MaskEnsemble: n != d1*d2");
    if (!(open_value > closed_value) || closed_value < 0.0)
        throw std::invalid_argument("MaskEnsemble: need open_value > closed_value >= 0");
    if (depth() <= 0.0 || depth() > 1.0)
        throw std::invalid_argument("MaskEnsemble: modulation depth must be in (0,1]");
    if (circulant()) {
        if (static_cast<int>(shifts.size()) != m)
            throw std::invalid_argument("MaskEnsemble: m != number of shifts");
        if (kernel.d1 != d1 || kernel.d2 != d2)
            throw std::invalid_argument("MaskEnsemble: kernel dimensions mismatch");
    } else if (bits.size() != static_cast<std::size_t>(m) * n) {
        throw std::invalid_argument("MaskEnsemble: dense bits length != m*n");
    }
}

MaskEnsemble generate_random_masks(int m, int d1, int d2, double open_probability,
                                   std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("generate_random_masks: m must be >= 1");
    if (!(open_probability > 0.0 && open_probability < 1.0))
        throw std::invalid_argument("generate_random_masks: open_probability must be in (0,1)");
    MaskEnsemble out;
    out.m = m;
    out.d1 = d1;
    out.d2 = d2;
    out.n = d1 * d2;
    out.seed = seed;
    out.bits.resize(static_cast<std::size_t>(m) * out.n);
    Rng rng(seed);
    for (auto& b : out.bits) b = rng.bernoulli(open_probability) ? 1 : 0;
    return out;
}

MaskEnsemble generate_circulant_masks(const ImageGrid& kernel,
                                      const std::vector<std::pair<int, int>>& shifts) {
    for (double v : kernel.values)
        if (v != 0.0 && v != 1.0)
            throw std::invalid_argument("generate_circulant_masks: kernel must be binary");
    std::set<std::pair<int, int>> unique(shifts.begin(), shifts.end());
    if (unique.size() != shifts.size())
        throw std::invalid_argument("generate_circulant_masks: duplicate shifts");
    if (shifts.empty()) throw std::invalid_argument("generate_circulant_masks: empty shift list");
    MaskEnsemble out;
    out.m = static_cast<int>(shifts.size());
    out.d1 = kernel.d1;
    out.d2 = kernel.d2;
    out.n = kernel.d1 * kernel.d2;
    out.kernel = kernel;
    out.shifts = shifts;
    // Normalize shifts into [0, d) so file round-trips are canonical.
    for (auto& s : out.shifts) {
        s.first = ((s.first % out.d1) + out.d1) % out.d1;
        s.second = ((s.second % out.d2) + out.d2) % out.d2;
    }
    std::set<std::pair<int, int>> canon(out.shifts.begin(), out.shifts.end());
    if (canon.size() != out.shifts.size())
        throw std::invalid_argument("generate_circulant_masks: shifts coincide modulo grid");
    return out;
}

MaskEnsemble apply_modulation_depth(MaskEnsemble masks, double depth, double offset) {
    if (depth <= 0.0 || depth > 1.0)
        throw std::invalid_argument("apply_modulation_depth: depth must be in (0,1]");
    if (offset < 0.0 || offset + depth > 1.0)
        throw std::invalid_argument("apply_modulation_depth: need offset >= 0, offset+depth <= 1");
    masks.open_value = offset + depth;
    masks.closed_value = offset;
    return masks;
}

MaskEnsemble densify(const MaskEnsemble& masks) {
    if (!masks.circulant()) return masks;
    MaskEnsemble out;
    out.m = masks.m;
    out.n = masks.n;
    out.d1 = masks.d1;
    out.d2 = masks.d2;
    out.open_value = masks.open_value;
    out.closed_value = masks.closed_value;
    out.seed = masks.seed;
    out.bits.resize(static_cast<std::size_t>(out.m) * out.n);
    for (int i = 0; i < out.m; ++i)
        for (int j = 0; j < out.n; ++j)
            out.bits[static_cast<std::size_t>(i) * out.n + j] = masks.bit(i, j);
    return out;
}

}  // namespace spx
