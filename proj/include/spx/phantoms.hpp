#pragma once

#include <string>

#include "spx/grid.hpp"

namespace spx {

enum class PhantomKind { XCross, Gradient, PiGlyph, SiemensStar };

PhantomKind phantom_kind_from_string(const std::string& name);

// Synthetic targets with values in [0,1]; x_cross and pi_glyph are binary,
// gradient ramps 0 -> 1 along columns, siemens_star has 8 angular spokes.
ImageGrid make_phantom(PhantomKind kind, int d1, int d2);

// values[i] = peak * exp(-||pos_i - center||^2 / (2 sigma^2)), positions in
// subpixel units (row, col).
ImageGrid make_gaussian_beam(int d1, int d2, double center_row, double center_col,
                             double sigma, double peak);

// Pointwise product beam .* target; the beam-illuminated scene p = l .* t.
ImageGrid compose_scene(const ImageGrid& beam, const ImageGrid& target);

}  // namespace spx
