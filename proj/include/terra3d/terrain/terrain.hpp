#pragma once

#include <cstddef>
#include <optional>

#include "terra3d/geodata/raster_grid.hpp"

namespace terra3d::terrain {

using geodata::RasterGrid;

// First and second partial derivatives of the elevation field H(x, y):
// p = dH/dx, q = dH/dy, r = d2H/dx2, s = d2H/dxdy, t = d2H/dy2.
// x points east, y points north.
struct SurfaceDerivatives {
    double p = 0.0;
    double q = 0.0;
    double r = 0.0;
    double s = 0.0;
    double t = 0.0;
};

struct TerrainOptions {
    double aspect_flat_sentinel = -1.0;
    // Cells with p^2 + q^2 below this are flat: aspect is the sentinel and
    // both curvatures are 0.
    double curvature_flat_epsilon = 1e-12;
};

/**
 * Central differences over the 3x3 neighborhood of (row, col), spacing h =
 * cellsize:
 *
 *   p = (E - W) / 2h           q = (N - S) / 2h
 *   r = (E - 2C + W) / h^2     t = (N - 2C + S) / h^2
 *   s = (NE - NW - SE + SW) / 4h^2
 *
 * The stencil is exact for polynomials of total degree <= 2. Returns nullopt
 * on border cells and when any of the nine cells is missing. Throws
 * std::out_of_range when (row, col) lies outside the grid.
 */
std::optional<SurfaceDerivatives> surface_derivatives(const RasterGrid& grid, std::size_t row, std::size_t col);

// Per-cell topographic factors for already-computed derivatives.
double slope_degrees(const SurfaceDerivatives& d);
double aspect_degrees(const SurfaceDerivatives& d, const TerrainOptions& opts = {});
double plane_curvature_value(const SurfaceDerivatives& d, const TerrainOptions& opts = {});
double profile_curvature_value(const SurfaceDerivatives& d, const TerrainOptions& opts = {});

// Factor grids share the input georeferencing and nodata value; cells
// without derivatives are written as nodata.
RasterGrid slope(const RasterGrid& dem, const TerrainOptions& opts = {});
RasterGrid aspect(const RasterGrid& dem, const TerrainOptions& opts = {});
RasterGrid plane_curvature(const RasterGrid& dem, const TerrainOptions& opts = {});
RasterGrid profile_curvature(const RasterGrid& dem, const TerrainOptions& opts = {});

}  // namespace terra3d::terrain
