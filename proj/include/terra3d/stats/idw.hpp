#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "terra3d/geodata/point_set.hpp"
#include "terra3d/geodata/raster_grid.hpp"

namespace terra3d::stats {

struct IdwOptions {
    double power = 2.0;
    // nullopt uses every sample.
    std::optional<std::size_t> k_neighbors{};
};

inline constexpr double kExactHitDistance = 1e-12;

/**
 * Inverse-distance-weighted estimate at `query` using planimetric distance,
 * w_i = 1 / d_i^power over the k nearest samples.
 *
 * Samples are ordered by (distance, x, y) before summation, so the result
 * does not depend on input order. A sample closer than kExactHitDistance is
 * returned verbatim.
 */
double idw_interpolate(const geodata::PointSet3D& points, std::string_view attr, geodata::WorldPoint query,
                       const IdwOptions& opts = {});

}  // namespace terra3d::stats
