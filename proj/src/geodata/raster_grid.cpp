#include "terra3d/geodata/raster_grid.hpp"

#include <algorithm>
#include <cmath>

#include "terra3d/error.hpp"

namespace terra3d::geodata {

RasterGrid::RasterGrid(GridSpec spec, double nodata_value, std::vector<double> values)
    : spec_(spec), nodata_(nodata_value), values_(std::move(values)) {
    if (spec_.ncols == 0 || spec_.nrows == 0) {
        throw FormatError({}, "grid dimensions must be positive");
    }
    if (!(spec_.cellsize > 0.0) || !std::isfinite(spec_.cellsize)) {
        throw FormatError({}, "cellsize must be positive");
    }
    if (values_.size() != spec_.ncols * spec_.nrows) {
        throw FormatError({}, "value count mismatch: expected " +
                                  std::to_string(spec_.ncols * spec_.nrows) + ", got " +
                                  std::to_string(values_.size()));
    }
}

RasterGrid RasterGrid::filled(GridSpec spec, double nodata_value, double fill) {
    return RasterGrid(spec, nodata_value, std::vector<double>(spec.ncols * spec.nrows, fill));
}

bool RasterGrid::is_missing_value(double v) const {
    return v == nodata_ || std::isnan(v);
}

bool RasterGrid::in_bounds(std::ptrdiff_t row, std::ptrdiff_t col) const {
    return row >= 0 && col >= 0 && static_cast<std::size_t>(row) < spec_.nrows &&
           static_cast<std::size_t>(col) < spec_.ncols;
}

std::size_t RasterGrid::missing_count() const {
    return static_cast<std::size_t>(std::count_if(values_.begin(), values_.end(),
                                                  [this](double v) { return is_missing_value(v); }));
}

}  // namespace terra3d::geodata
