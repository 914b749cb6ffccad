#include "terra3d/stats/grid_interpolation.hpp"

#include <optional>

#include "terra3d/error.hpp"
#include "terra3d/stats/kriging.hpp"

namespace terra3d::stats {

geodata::RasterGrid interpolate_grid(const geodata::PointSet3D& points, std::string_view attr,
                                     const InterpolationMethod& method, const geodata::GridSpec& spec,
                                     double nodata_value) {
    auto out = geodata::RasterGrid::filled(spec, nodata_value, nodata_value);
    std::optional<OrdinaryKriging> kriging;
    if (const auto* model = std::get_if<VariogramModel>(&method)) {
        kriging.emplace(points, attr, *model);
    }
    for (std::size_t r = 0; r < spec.nrows; ++r) {
        for (std::size_t c = 0; c < spec.ncols; ++c) {
            const auto center = spec.cell_center(r, c);
            if (kriging) {
                out.set(r, c, kriging->estimate(center).estimate);
            } else {
                out.set(r, c, idw_interpolate(points, attr, center, std::get<IdwOptions>(method)));
            }
        }
    }
    return out;
}

}  // namespace terra3d::stats
