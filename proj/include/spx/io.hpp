#pragma once

#include <string>

#include "spx/grid.hpp"
#include "spx/masks.hpp"

namespace spx {

// 8- or 16-bit binary PGM (P5). Values are clipped to [0, peak] and scaled
// to the full sample range on write; reads return values scaled back to
// [0, 1].
void write_pgm(const std::string& path, const ImageGrid& img, int bits = 16,
               double peak = 1.0);
ImageGrid read_pgm(const std::string& path);

// Lossless textual float raster: "d1 d2\n" then n whitespace-separated
// decimals (shortest round-trip formatting).
void write_float_raster(const std::string& path, const ImageGrid& img);
ImageGrid read_float_raster(const std::string& path);

// Mask ensemble persistence. Header line "m n storage seed"; dense payload
// is packed bit rows, circulant payload is the kernel raster plus the shift
// list. Open/closed values are kept on the second line so modulation depth
// round-trips.
void write_masks(const std::string& path, const MaskEnsemble& masks);
MaskEnsemble read_masks(const std::string& path);

}  // namespace spx
