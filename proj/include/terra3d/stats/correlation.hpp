#pragma once

#include <span>
#include <string>

#include <Eigen/Dense>

#include "terra3d/geodata/point_set.hpp"

namespace terra3d::stats {

/**
 * Pearson product-moment correlation between every pair of the named
 * attributes. The result is symmetric with a unit diagonal.
 *
 * Requires at least two points. Unknown attributes raise ArgumentError;
 * zero-variance attributes raise ArgumentError naming every offending column.
 */
Eigen::MatrixXd correlation_matrix(const geodata::PointSet3D& points, std::span<const std::string> attrs);

}  // namespace terra3d::stats
