#pragma once

#include <string_view>
#include <variant>

#include "terra3d/geodata/point_set.hpp"
#include "terra3d/geodata/raster_grid.hpp"
#include "terra3d/stats/idw.hpp"
#include "terra3d/stats/variogram.hpp"

namespace terra3d::stats {

using InterpolationMethod = std::variant<IdwOptions, VariogramModel>;

inline constexpr double kDefaultNodata = -9999.0;

// Interpolates `attr` at every cell center of `spec`.
geodata::RasterGrid interpolate_grid(const geodata::PointSet3D& points, std::string_view attr,
                                     const InterpolationMethod& method, const geodata::GridSpec& spec,
                                     double nodata_value = kDefaultNodata);

}  // namespace terra3d::stats
