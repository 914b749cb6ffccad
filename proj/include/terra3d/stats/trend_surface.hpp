#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "terra3d/geodata/point_set.hpp"

namespace terra3d::stats {

// Affine map from world coordinates into the fitting frame:
// u = (x - cx) / sx, v = (y - cy) / sy.
struct CoordinateFrame {
    double cx = 0.0;
    double cy = 0.0;
    double sx = 1.0;
    double sy = 1.0;
};

/**
 * Polynomial trend surface z = f(x, y) of total degree 1..3.
 *
 * Monomials x^i y^j (i + j <= degree) are ordered by total degree, then by
 * descending power of x: 1, x, y, x^2, xy, y^2, x^3, x^2y, xy^2, y^3.
 * `coefficients` are in world coordinates; `frame_coefficients` are the same
 * polynomial expressed in the centered, unit-box frame used for fitting and
 * evaluation.
 */
struct TrendSurfaceModel {
    int degree = 1;
    std::vector<double> coefficients;
    CoordinateFrame frame;
    std::vector<double> frame_coefficients;
    double r_squared = 1.0;
    double residual_rms = 0.0;

    // Model with world-frame coefficients and an identity frame.
    static TrendSurfaceModel from_coefficients(int degree, std::vector<double> coefficients);
};

std::size_t trend_coefficient_count(int degree);

// (i, j) exponent pairs in coefficient order.
std::vector<std::pair<int, int>> trend_monomials(int degree);

// Least-squares fit through a column-pivoted Householder QR of the design
// matrix in the unit-box frame. Throws ArgumentError for degree outside
// [1, 3] and NumericError when underdetermined or rank deficient.
TrendSurfaceModel fit_trend_surface(const geodata::PointSet3D& points, int degree, std::string_view attr = "z");

double evaluate_trend_surface(const TrendSurfaceModel& model, double x, double y);

}  // namespace terra3d::stats
