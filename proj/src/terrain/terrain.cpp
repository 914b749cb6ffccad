#include "terra3d/terrain/terrain.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "terra3d/error.hpp"

namespace terra3d::terrain {

namespace {

constexpr double kRadToDeg = 180.0 / std::numbers::pi;

template <typename Fn>
RasterGrid map_cells(const RasterGrid& dem, const TerrainOptions& opts, Fn fn) {
    if (!(opts.curvature_flat_epsilon >= 0.0)) {
        throw ArgumentError("curvature_flat_epsilon must be non-negative");
    }
    RasterGrid out = RasterGrid::filled(dem.spec(), dem.nodata_value(), dem.nodata_value());
    for (std::size_t r = 0; r < dem.nrows(); ++r) {
        for (std::size_t c = 0; c < dem.ncols(); ++c) {
            if (const auto d = surface_derivatives(dem, r, c)) {
                out.set(r, c, fn(*d));
            }
        }
    }
    return out;
}

bool is_flat(const SurfaceDerivatives& d, const TerrainOptions& opts) {
    return d.p * d.p + d.q * d.q < opts.curvature_flat_epsilon;
}

}  // namespace

std::optional<SurfaceDerivatives> surface_derivatives(const RasterGrid& grid, std::size_t row, std::size_t col) {
    if (row >= grid.nrows() || col >= grid.ncols()) {
        throw std::out_of_range("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                                ") outside " + std::to_string(grid.nrows()) + "x" + std::to_string(grid.ncols()) +
                                " grid");
    }
    if (row == 0 || col == 0 || row + 1 >= grid.nrows() || col + 1 >= grid.ncols()) {
        return std::nullopt;
    }
    // z[i][j]: i = 0 north row, j = 0 west column
    double z[3][3];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double v = grid.at(row + i - 1, col + j - 1);
            if (grid.is_missing_value(v)) {
                return std::nullopt;
            }
            z[i][j] = v;
        }
    }
    const double h = grid.cellsize();
    const double c = z[1][1];
    const double n = z[0][1], s = z[2][1], e = z[1][2], w = z[1][0];
    const double ne = z[0][2], nw = z[0][0], se = z[2][2], sw = z[2][0];

    SurfaceDerivatives d;
    d.p = (e - w) / (2.0 * h);
    d.q = (n - s) / (2.0 * h);
    d.r = (e - 2.0 * c + w) / (h * h);
    d.t = (n - 2.0 * c + s) / (h * h);
    d.s = (ne - nw - se + sw) / (4.0 * h * h);
    return d;
}

double slope_degrees(const SurfaceDerivatives& d) {
    return std::atan(std::sqrt(d.p * d.p + d.q * d.q)) * kRadToDeg;
}

double aspect_degrees(const SurfaceDerivatives& d, const TerrainOptions& opts) {
    if (is_flat(d, opts)) {
        return opts.aspect_flat_sentinel;
    }
    // 180 - atan(q/p) + 90, with the two-argument arctangent resolving the
    // quadrant; agrees with the single-argument form whenever p > 0.
    double a = std::fmod(270.0 - std::atan2(d.q, d.p) * kRadToDeg, 360.0);
    if (a < 0.0) {
        a += 360.0;
    }
    if (a >= 360.0) {
        a -= 360.0;
    }
    return a;
}

double plane_curvature_value(const SurfaceDerivatives& d, const TerrainOptions& opts) {
    if (is_flat(d, opts)) {
        return 0.0;
    }
    const double g2 = d.p * d.p + d.q * d.q;
    return -(d.q * d.q * d.r - 2.0 * d.p * d.q * d.s + d.p * d.p * d.t) / std::pow(g2, 1.5);
}

double profile_curvature_value(const SurfaceDerivatives& d, const TerrainOptions& opts) {
    if (is_flat(d, opts)) {
        return 0.0;
    }
    const double g2 = d.p * d.p + d.q * d.q;
    return -(d.p * d.p * d.r + 2.0 * d.p * d.q * d.s + d.q * d.q * d.t) / (g2 * std::pow(1.0 + g2, 1.5));
}

RasterGrid slope(const RasterGrid& dem, const TerrainOptions& opts) {
    return map_cells(dem, opts, [](const SurfaceDerivatives& d) { return slope_degrees(d); });
}

RasterGrid aspect(const RasterGrid& dem, const TerrainOptions& opts) {
    return map_cells(dem, opts, [&](const SurfaceDerivatives& d) { return aspect_degrees(d, opts); });
}

RasterGrid plane_curvature(const RasterGrid& dem, const TerrainOptions& opts) {
    return map_cells(dem, opts, [&](const SurfaceDerivatives& d) { return plane_curvature_value(d, opts); });
}

RasterGrid profile_curvature(const RasterGrid& dem, const TerrainOptions& opts) {
    return map_cells(dem, opts, [&](const SurfaceDerivatives& d) { return profile_curvature_value(d, opts); });
}

}  // namespace terra3d::terrain
