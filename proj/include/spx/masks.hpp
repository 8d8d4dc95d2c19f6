#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "spx/grid.hpp"

namespace spx {

// m binary masks over the n = d1*d2 subpixel grid. Stored either dense
// (one byte per entry) or as a circulant descriptor: a kernel image plus a
// list of cyclic 2D shifts, mask i being the kernel shifted by shifts[i].
// Physical open/closed transmission values model the modulation depth.
struct MaskEnsemble {
    int m = 0;
    int n = 0;
    int d1 = 0;
    int d2 = 0;
    double open_value = 1.0;
    double closed_value = 0.0;
    std::uint64_t seed = 0;

    std::vector<std::uint8_t> bits;               // dense: m*n entries in {0,1}
    ImageGrid kernel;                             // circulant: binary kernel
    std::vector<std::pair<int, int>> shifts;      // circulant: m shifts (dr, dc)

    bool circulant() const { return !shifts.empty(); }
    double depth() const { return open_value - closed_value; }

    std::uint8_t bit(int i, int j) const {
        if (!circulant()) return bits[static_cast<std::size_t>(i) * n + j];
        const int r = j / d2, c = j % d2;
        int kr = (r - shifts[i].first) % d1;
        int kc = (c - shifts[i].second) % d2;
        if (kr < 0) kr += d1;
        if (kc < 0) kc += d2;
        return kernel.at(kr, kc) != 0.0 ? 1 : 0;
    }

    // Physical transmission of subpixel j in mask i.
    double entry(int i, int j) const {
        return closed_value + depth() * bit(i, j);
    }

    std::vector<double> dense_row(int i) const;
    void validate() const;
};

// Independent Bernoulli(open_probability) entries, reproducible for a seed.
MaskEnsemble generate_random_masks(int m, int d1, int d2, double open_probability,
                                   std::uint64_t seed);

// Mask i = kernel cyclically shifted by shifts[i]; the dense expansion is a
// row of the 2D circulant matrix generated by the kernel.
MaskEnsemble generate_circulant_masks(const ImageGrid& kernel,
                                      const std::vector<std::pair<int, int>>& shifts);

// Degraded modulation: open = offset + depth, closed = offset.
MaskEnsemble apply_modulation_depth(MaskEnsemble masks, double depth, double offset);

// Expand to dense storage (testing oracle for the circulant path).
MaskEnsemble densify(const MaskEnsemble& masks);

}  // namespace spx
