#include "spx/phantoms.hpp"

#include <algorithm>
#include <cmath>

namespace spx {

PhantomKind phantom_kind_from_string(const std::string& name) {
    if (name == "x_cross") return PhantomKind::XCross;
    if (name == "gradient") return PhantomKind::Gradient;
    if (name == "pi_glyph") return PhantomKind::PiGlyph;
    if (name == "siemens_star") return PhantomKind::SiemensStar;
    throw std::invalid_argument("unknown phantom kind: " + name);
}

namespace {

ImageGrid x_cross(int d1, int d2) {
    ImageGrid img(d1, d2, 0.0, true);
    // Two diagonals in index space; conditions are symmetric under transpose
    // (square grids) and 180-degree rotation.
    const int t = std::max(1, std::min(d1, d2) / 16);
    for (int r = 0; r < d1; ++r) {
        for (int c = 0; c < d2; ++c) {
            const long a = static_cast<long>(r) * (d2 - 1) - static_cast<long>(c) * (d1 - 1);
            const long b = static_cast<long>(r) * (d2 - 1) + static_cast<long>(c) * (d1 - 1) -
                           static_cast<long>(d1 - 1) * (d2 - 1);
            const long lim = static_cast<long>(t) * std::max(d1 - 1, d2 - 1);
            if (std::labs(a) <= lim || std::labs(b) <= lim) img.at(r, c) = 1.0;
        }
    }
    return img;
}

ImageGrid gradient_ramp(int d1, int d2) {
    ImageGrid img(d1, d2, 0.0, true);
    for (int r = 0; r < d1; ++r)
        for (int c = 0; c < d2; ++c)
            img.at(r, c) = (d2 > 1) ? static_cast<double>(c) / (d2 - 1) : 1.0;
    return img;
}

ImageGrid pi_glyph(int d1, int d2) {
    ImageGrid img(d1, d2, 0.0, true);
    // Rasterized in normalized [0,1]^2 coordinates: a top bar with two legs,
    // the right leg ending in a small outward foot.
    auto inside = [](double y, double x) {
        const bool bar = y >= 0.18 && y <= 0.32 && x >= 0.12 && x <= 0.88;
        const bool left_leg = y > 0.32 && y <= 0.85 && x >= 0.26 && x <= 0.40;
        const bool right_leg = y > 0.32 && y <= 0.80 && x >= 0.60 && x <= 0.74;
        const bool foot = y > 0.68 && y <= 0.82 && x > 0.74 && x <= 0.84;
        return bar || left_leg || right_leg || foot;
    };
    for (int r = 0; r < d1; ++r)
        for (int c = 0; c < d2; ++c)
            if (inside((r + 0.5) / d1, (c + 0.5) / d2)) img.at(r, c) = 1.0;
    return img;
}

ImageGrid siemens_star(int d1, int d2) {
    ImageGrid img(d1, d2, 0.0, true);
    const int spokes = 8;
    const double cy = 0.5 * (d1 - 1), cx = 0.5 * (d2 - 1);
    const double radius = 0.48 * std::min(d1, d2);
    for (int r = 0; r < d1; ++r) {
        for (int c = 0; c < d2; ++c) {
            const double dy = r - cy, dx = c - cx;
            if (dy * dy + dx * dx > radius * radius) continue;
            const double theta = std::atan2(dy, dx);
            if (std::sin(spokes * theta) > 0.0) img.at(r, c) = 1.0;
        }
    }
    return img;
}

}  // namespace

ImageGrid make_phantom(PhantomKind kind, int d1, int d2) {
    if (d1 < 8 || d2 < 8) throw std::invalid_argument("make_phantom: d1,d2 must be >= 8");
    switch (kind) {
        case PhantomKind::XCross: return x_cross(d1, d2);
        case PhantomKind::Gradient: return gradient_ramp(d1, d2);
        case PhantomKind::PiGlyph: return pi_glyph(d1, d2);
        case PhantomKind::SiemensStar: return siemens_star(d1, d2);
    }
    throw std::invalid_argument("make_phantom: unknown kind");
}

ImageGrid make_gaussian_beam(int d1, int d2, double center_row, double center_col,
                             double sigma, double peak) {
    if (sigma <= 0.0) throw std::invalid_argument("make_gaussian_beam: sigma must be > 0");
    if (peak <= 0.0 || peak > 1.0)
        throw std::invalid_argument("make_gaussian_beam: peak must be in (0,1]");
    ImageGrid img(d1, d2, 0.0, true);
    const double inv = 1.0 / (2.0 * sigma * sigma);
    for (int r = 0; r < d1; ++r) {
        for (int c = 0; c < d2; ++c) {
            const double dy = r - center_row, dx = c - center_col;
            img.at(r, c) = peak * std::exp(-(dy * dy + dx * dx) * inv);
        }
    }
    return img;
}

ImageGrid compose_scene(const ImageGrid& beam, const ImageGrid& target) {
    if (beam.d1 != target.d1 || beam.d2 != target.d2)
        throw std::invalid_argument("compose_scene: dimension mismatch");
    ImageGrid out(beam.d1, beam.d2, 0.0, true);
    for (std::size_t i = 0; i < out.size(); ++i)
        out.values[i] = beam.values[i] * target.values[i];
    return out;
}

}  // namespace spx
