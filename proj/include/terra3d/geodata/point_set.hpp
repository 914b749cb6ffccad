#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace terra3d::geodata {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/**
 * Scattered 3D points with named numeric attribute columns.
 *
 * The z coordinate is always available as the attribute "z". Construction
 * rejects ragged columns and duplicate planimetric (x, y) coordinates, so a
 * PointSet3D is always valid interpolation input.
 */
class PointSet3D {
public:
    PointSet3D() = default;

    // `extra` holds additional columns in the order given; names must not
    // repeat and must not be x, y or z.
    explicit PointSet3D(std::vector<Point3> points,
                        std::vector<std::pair<std::string, std::vector<double>>> extra = {});

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    std::span<const Point3> points() const { return points_; }
    const Point3& operator[](std::size_t i) const { return points_[i]; }

    // Attribute names in column order, starting with "z".
    std::vector<std::string> attribute_names() const;
    bool has_attribute(std::string_view name) const;

    // Throws ArgumentError for unknown names.
    std::span<const double> attribute(std::string_view name) const;

private:
    std::vector<Point3> points_;
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
};

// CSV with header line; required columns x, y, z in any position.
PointSet3D load_points(const std::filesystem::path& path);
PointSet3D parse_points(std::string_view text, const std::string& source = {});

}  // namespace terra3d::geodata
