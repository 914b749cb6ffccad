#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

namespace terra3d::geodata {

struct WorldPoint {
    double x = 0.0;
    double y = 0.0;
};

// Georeferencing of a regular grid. The origin is the lower-left corner of
// the lower-left cell; row 0 is the northernmost row.
struct GridSpec {
    double x_origin = 0.0;
    double y_origin = 0.0;
    double cellsize = 1.0;
    std::size_t ncols = 0;
    std::size_t nrows = 0;

    WorldPoint cell_center(std::size_t row, std::size_t col) const {
        return {x_origin + (static_cast<double>(col) + 0.5) * cellsize,
                y_origin + (static_cast<double>(nrows - row) - 0.5) * cellsize};
    }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/**
 * Regular grid of real values with lower-left-corner georeferencing.
 *
 * Values are stored row-major with row 0 the northernmost row, matching the
 * ASCII grid file layout. A cell is missing when it equals nodata_value or
 * is NaN; every analysis skips missing cells.
 */
class RasterGrid {
public:
    RasterGrid() = default;

    // Throws FormatError when the value count or cellsize is invalid.
    RasterGrid(GridSpec spec, double nodata_value, std::vector<double> values);

    // Grid of the given geometry with every cell set to `fill`.
    static RasterGrid filled(GridSpec spec, double nodata_value, double fill);

    std::size_t ncols() const { return spec_.ncols; }
    std::size_t nrows() const { return spec_.nrows; }
    double x_origin() const { return spec_.x_origin; }
    double y_origin() const { return spec_.y_origin; }
    double cellsize() const { return spec_.cellsize; }
    double nodata_value() const { return nodata_; }
    const GridSpec& spec() const { return spec_; }

    std::span<const double> values() const { return values_; }

    double at(std::size_t row, std::size_t col) const { return values_[index(row, col)]; }
    void set(std::size_t row, std::size_t col, double v) { values_[index(row, col)] = v; }
    void set_missing(std::size_t row, std::size_t col) { set(row, col, nodata_); }

    bool is_missing_value(double v) const;
    bool is_missing(std::size_t row, std::size_t col) const { return is_missing_value(at(row, col)); }
    bool in_bounds(std::ptrdiff_t row, std::ptrdiff_t col) const;

    WorldPoint cell_center(std::size_t row, std::size_t col) const { return spec_.cell_center(row, col); }

    std::size_t missing_count() const;

    friend bool operator==(const RasterGrid&, const RasterGrid&) = default;

private:
    std::size_t index(std::size_t row, std::size_t col) const { return row * spec_.ncols + col; }

    GridSpec spec_;
    double nodata_ = -9999.0;
    std::vector<double> values_;
};

// ESRI-style ASCII grid I/O. Header keys are case-insensitive and must appear
// in the order ncols, nrows, xllcorner, yllcorner, cellsize, NODATA_value.
RasterGrid load_raster(const std::filesystem::path& path);
RasterGrid parse_raster(std::string_view text, const std::string& source = {});

// Numbers are printed with 10 significant digits. The file is written to a
// temporary sibling and renamed into place.
void save_raster(const RasterGrid& grid, const std::filesystem::path& path);
std::string format_raster(const RasterGrid& grid);

}  // namespace terra3d::geodata
