#include "terra3d/geodata/point_set.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "terra3d/error.hpp"
#include "terra3d/geodata/csv.hpp"
#include "terra3d/geodata/file_io.hpp"

namespace terra3d::geodata {

namespace {

void check_unique_xy(std::span<const Point3> points, const std::string& source) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::pair(points[a].x, points[a].y) < std::pair(points[b].x, points[b].y);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const Point3& p = points[order[k - 1]];
        const Point3& q = points[order[k]];
        if (p.x == q.x && p.y == q.y) {
            const auto [i, j] = std::minmax(order[k - 1], order[k]);
            throw FormatError(source, "duplicate planimetric coordinate (" + format_number(p.x) + ", " +
                                          format_number(p.y) + ") at points " + std::to_string(i) +
                                          " and " + std::to_string(j));
        }
    }
}

}  // namespace

PointSet3D::PointSet3D(std::vector<Point3> points,
                       std::vector<std::pair<std::string, std::vector<double>>> extra)
    : points_(std::move(points)) {
    check_unique_xy(points_, {});
    names_.emplace_back("z");
    std::vector<double> z;
    z.reserve(points_.size());
    for (const auto& p : points_) {
        z.push_back(p.z);
    }
    columns_.push_back(std::move(z));
    for (auto& [name, column] : extra) {
        if (name == "x" || name == "y" || has_attribute(name)) {
            throw FormatError({}, "duplicate attribute column '" + name + "'");
        }
        if (column.size() != points_.size()) {
            throw FormatError({}, "attribute '" + name + "' has " + std::to_string(column.size()) +
                                      " values for " + std::to_string(points_.size()) + " points");
        }
        names_.push_back(std::move(name));
        columns_.push_back(std::move(column));
    }
}

std::vector<std::string> PointSet3D::attribute_names() const {
    return names_;
}

bool PointSet3D::has_attribute(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::span<const double> PointSet3D::attribute(std::string_view name) const {
    const auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
        throw ArgumentError("unknown attribute '" + std::string(name) + "'");
    }
    return columns_[static_cast<std::size_t>(it - names_.begin())];
}

PointSet3D parse_points(std::string_view text, const std::string& source) {
    const auto lines = csv::nonblank_lines(text);
    if (lines.empty()) {
        throw FormatError(source, "missing header line");
    }
    const auto header = csv::split_record(lines.front().second);
    std::optional<std::size_t> xi, yi, zi;
    std::vector<std::pair<std::size_t, std::string>> extra_cols;
    for (std::size_t c = 0; c < header.size(); ++c) {
        const std::string& name = header[c];
        if (name.empty()) {
            throw FormatError(source, "empty column name in header");
        }
        const bool seen = std::count(header.begin(), header.begin() + static_cast<long>(c), name) > 0;
        if (seen) {
            throw FormatError(source, "duplicate column '" + name + "'");
        }
        if (name == "x") {
            xi = c;
        } else if (name == "y") {
            yi = c;
        } else if (name == "z") {
            zi = c;
        } else {
            extra_cols.emplace_back(c, name);
        }
    }
    if (!xi || !yi || !zi) {
        throw FormatError(source, "missing required column(s):" + std::string(xi ? "" : " x") +
                                      (yi ? "" : " y") + (zi ? "" : " z"));
    }

    std::vector<Point3> points;
    std::vector<std::vector<double>> extra(extra_cols.size());
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto [lineno, line] = lines[li];
        const auto fields = csv::split_record(line);
        if (fields.size() != header.size()) {
            throw FormatError(source, "ragged row on line " + std::to_string(lineno) + ": expected " +
                                          std::to_string(header.size()) + " fields, got " +
                                          std::to_string(fields.size()));
        }
        std::vector<double> row(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (!csv::parse_real(fields[c], row[c])) {
                throw FormatError(source, "non-numeric value '" + fields[c] + "' in column '" + header[c] +
                                              "' on line " + std::to_string(lineno));
            }
        }
        points.push_back({row[*xi], row[*yi], row[*zi]});
        for (std::size_t e = 0; e < extra_cols.size(); ++e) {
            extra[e].push_back(row[extra_cols[e].first]);
        }
    }

    check_unique_xy(points, source);
    std::vector<std::pair<std::string, std::vector<double>>> named;
    for (std::size_t e = 0; e < extra_cols.size(); ++e) {
        named.emplace_back(extra_cols[e].second, std::move(extra[e]));
    }
    return PointSet3D(std::move(points), std::move(named));
}

PointSet3D load_points(const std::filesystem::path& path) {
    return parse_points(read_text_file(path), path.string());
}

}  // namespace terra3d::geodata
