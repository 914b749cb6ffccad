#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "terra3d/geodata/raster_grid.hpp"

namespace terra3d::geodata {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;

    friend bool operator==(const Rgb&, const Rgb&) = default;
};

// Linear blue (t = 0) to red (t = 1) ramp; t is clamped to [0, 1].
Rgb ramp_color(double t);

inline constexpr int kHeatmapCellPixels = 10;

// SVG with one <rect> per cell. Fill is mapped linearly from the [min, max]
// of non-missing values; a degenerate range maps every cell to t = 0.5.
// Missing cells are drawn with fill="none". Throws ArgumentError if every
// cell is missing.
std::string render_heatmap_svg(const RasterGrid& grid);
void render_heatmap(const RasterGrid& grid, const std::filesystem::path& path);

}  // namespace terra3d::geodata
