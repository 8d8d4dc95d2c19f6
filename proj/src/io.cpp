#include "spx/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spx {

namespace {

void fail(const std::string& path, const std::string& what) {
    throw IoError(path + ": " + what);
}

}  // namespace

void write_pgm(const std::string& path, const ImageGrid& img, int bits, double peak) {
    if (bits != 8 && bits != 16) throw std::invalid_argument("write_pgm: bits must be 8 or 16");
    if (peak <= 0.0) throw std::invalid_argument("write_pgm: peak must be > 0");
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(path, "cannot open for writing");
    const int maxval = bits == 8 ? 255 : 65535;
    f << "P5\n" << img.d2 << " " << img.d1 << "\n" << maxval << "\n";
    for (double v : img.values) {
        const double t = std::clamp(v / peak, 0.0, 1.0);
        const unsigned s = static_cast<unsigned>(std::lround(t * maxval));
        if (bits == 16) f.put(static_cast<char>((s >> 8) & 0xff));
        f.put(static_cast<char>(s & 0xff));
    }
    if (!f) fail(path, "write failed");
}

ImageGrid read_pgm(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(path, "cannot open");
    std::string magic;
    f >> magic;
    if (magic != "P5") fail(path, "not a binary PGM (P5)");
    auto next_int = [&]() {
        // Skip whitespace and '#' comment lines between header fields.
        int ch;
        while ((ch = f.peek()) != EOF) {
            if (ch == '#') {
                std::string line;
                std::getline(f, line);
            } else if (std::isspace(ch)) {
                f.get();
            } else {
                break;
            }
        }
        long v = -1;
        f >> v;
        return v;
    };
    const long w = next_int(), h = next_int(), maxval = next_int();
    if (w < 1 || h < 1 || (maxval != 255 && maxval != 65535)) fail(path, "bad PGM header");
    f.get();  // single whitespace after maxval
    ImageGrid img(static_cast<int>(h), static_cast<int>(w), 0.0, true);
    for (auto& v : img.values) {
        int hi = f.get();
        if (maxval == 65535) {
            int lo = f.get();
            if (lo == EOF) fail(path, "truncated pixel data");
            v = ((hi << 8) | lo) / 65535.0;
        } else {
            v = hi / 255.0;
        }
        if (hi == EOF) fail(path, "truncated pixel data");
    }
    return img;
}

void write_float_raster(const std::string& path, const ImageGrid& img) {
    std::ofstream f(path);
    if (!f) fail(path, "cannot open for writing");
    f << img.d1 << " " << img.d2 << "\n";
    char buf[40];
    for (std::size_t i = 0; i < img.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", img.values[i]);
        f << buf << ((i + 1) % img.d2 == 0 ? '\n' : ' ');
    }
    if (!f) fail(path, "write failed");
}

ImageGrid read_float_raster(const std::string& path) {
    std::ifstream f(path);
    if (!f) fail(path, "cannot open");
    int d1 = 0, d2 = 0;
    if (!(f >> d1 >> d2) || d1 < 1 || d2 < 1) fail(path, "bad float raster header");
    ImageGrid img(d1, d2);
    for (auto& v : img.values)
        if (!(f >> v)) fail(path, "truncated float raster");
    return img;
}

void write_masks(const std::string& path, const MaskEnsemble& masks) {
    masks.validate();
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(path, "cannot open for writing");
    f << masks.m << " " << masks.n << " " << (masks.circulant() ? "circulant" : "dense") << " "
      << masks.seed << "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", masks.open_value, masks.closed_value);
    f << buf;
    if (!masks.circulant()) {
        f << masks.d1 << " " << masks.d2 << "\n";
        // Packed bit rows, MSB first, each row padded to a whole byte.
        const int stride = (masks.n + 7) / 8;
        std::vector<char> row(stride);
        for (int i = 0; i < masks.m; ++i) {
            std::fill(row.begin(), row.end(), 0);
            for (int j = 0; j < masks.n; ++j)
                if (masks.bits[static_cast<std::size_t>(i) * masks.n + j])
                    row[j >> 3] |= static_cast<char>(0x80u >> (j & 7));
            f.write(row.data(), stride);
        }
    } else {
        f << masks.d1 << " " << masks.d2 << "\n";
        for (int r = 0; r < masks.d1; ++r) {
            for (int c = 0; c < masks.d2; ++c) f << (masks.kernel.at(r, c) != 0.0 ? '1' : '0');
            f << "\n";
        }
        for (const auto& s : masks.shifts) f << s.first << " " << s.second << "\n";
    }
    if (!f) fail(path, "write failed");
}

MaskEnsemble read_masks(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(path, "cannot open");
    MaskEnsemble out;
    std::string storage;
    if (!(f >> out.m >> out.n >> storage >> out.seed)) fail(path, "bad mask header");
    if (!(f >> out.open_value >> out.closed_value)) fail(path, "bad mask value line");
    if (!(f >> out.d1 >> out.d2) || out.d1 * out.d2 != out.n) fail(path, "bad mask dimensions");
    if (storage == "dense") {
        f.get();
        const int stride = (out.n + 7) / 8;
        std::vector<char> row(stride);
        out.bits.resize(static_cast<std::size_t>(out.m) * out.n);
        for (int i = 0; i < out.m; ++i) {
            f.read(row.data(), stride);
            if (!f) fail(path, "truncated mask rows");
            for (int j = 0; j < out.n; ++j)
                out.bits[static_cast<std::size_t>(i) * out.n + j] =
                    (row[j >> 3] & (0x80u >> (j & 7))) ? 1 : 0;
        }
    } else if (storage == "circulant") {
        out.kernel = ImageGrid(out.d1, out.d2);
        std::string line;
        std::getline(f, line);
        for (int r = 0; r < out.d1; ++r) {
            std::getline(f, line);
            if (static_cast<int>(line.size()) < out.d2) fail(path, "truncated kernel raster");
            for (int c = 0; c < out.d2; ++c) out.kernel.at(r, c) = line[c] == '1' ? 1.0 : 0.0;
        }
        out.shifts.resize(out.m);
        for (auto& s : out.shifts)
            if (!(f >> s.first >> s.second)) fail(path, "truncated shift list");
    } else {
        fail(path, "unknown mask storage '" + storage + "'");
    }
    out.validate();
    return out;
}

}  // namespace spx
