#include "terra3d/geodata/heatmap.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

#include "terra3d/error.hpp"
#include "terra3d/geodata/file_io.hpp"

namespace terra3d::geodata {

Rgb ramp_color(double t) {
    t = std::clamp(t, 0.0, 1.0);
    const auto channel = [](double f) { return static_cast<std::uint8_t>(std::lround(255.0 * f)); };
    return {channel(t), 0, channel(1.0 - t)};
}

std::string render_heatmap_svg(const RasterGrid& grid) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const double v : grid.values()) {
        if (!grid.is_missing_value(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (lo > hi) {
        throw ArgumentError("cannot render heatmap: all cells are missing");
    }

    const int px = kHeatmapCellPixels;
    const auto width = static_cast<long long>(grid.ncols()) * px;
    const auto height = static_cast<long long>(grid.nrows()) * px;
    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) + "\" height=\"" +
           std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n";
    std::array<char, 160> buf{};
    for (std::size_t r = 0; r < grid.nrows(); ++r) {
        for (std::size_t c = 0; c < grid.ncols(); ++c) {
            const double v = grid.at(r, c);
            const long long x = static_cast<long long>(c) * px;
            const long long y = static_cast<long long>(r) * px;
            if (grid.is_missing_value(v)) {
                std::snprintf(buf.data(), buf.size(),
                              "<rect x=\"%lld\" y=\"%lld\" width=\"%d\" height=\"%d\" fill=\"none\"/>\n", x, y, px,
                              px);
            } else {
                const double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
                const Rgb rgb = ramp_color(t);
                std::snprintf(buf.data(), buf.size(),
                              "<rect x=\"%lld\" y=\"%lld\" width=\"%d\" height=\"%d\" fill=\"#%02x%02x%02x\"/>\n", x,
                              y, px, px, rgb.r, rgb.g, rgb.b);
            }
            out += buf.data();
        }
    }
    out += "</svg>\n";
    return out;
}

void render_heatmap(const RasterGrid& grid, const std::filesystem::path& path) {
    write_file_atomic(path, render_heatmap_svg(grid));
}

}  // namespace terra3d::geodata
