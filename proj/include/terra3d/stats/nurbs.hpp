#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "terra3d/geodata/point_set.hpp"

namespace terra3d::stats {

/**
 * Bicubic NURBS surface z = S(x, y) with unit weights over the bounding
 * rectangle of the fitted points. Knots are clamped and uniform and are
 * expressed directly in world x (u) and y (v).
 *
 * Control value (a, b) lives at control[a * nv + b], a along x, b along y.
 */
struct SplineSurfaceModel {
    int degree_u = 3;
    int degree_v = 3;
    std::size_t nu = 0;
    std::size_t nv = 0;
    std::vector<double> control;
    std::vector<double> weights;
    std::vector<double> knots_u;
    std::vector<double> knots_v;
    double residual_rms = 0.0;

    double control_value(std::size_t a, std::size_t b) const { return control[a * nv + b]; }
    double x_min() const { return knots_u.front(); }
    double x_max() const { return knots_u.back(); }
    double y_min() const { return knots_v.front(); }
    double y_max() const { return knots_v.back(); }
};

inline constexpr double kNurbsRidge = 1e-8;
inline constexpr int kRidgeRefinementSteps = 3;

// n_control + degree + 1 knots; first and last knot repeated degree + 1 times.
std::vector<double> clamped_uniform_knots(std::size_t n_control, int degree, double lo, double hi);

// Knot span index k with knots[k] <= u < knots[k+1]; the upper domain end
// maps to the last non-empty span.
std::size_t find_knot_span(std::span<const double> knots, int degree, std::size_t n_control, double u);

// Values of all n_control B-spline basis functions at u (Cox-de Boor).
std::vector<double> bspline_basis(std::span<const double> knots, int degree, std::size_t n_control, double u);

/**
 * Least-squares control net for nu x nv bicubic control values. The normal
 * equations are factorized with `ridge` added to the diagonal, then refined
 * kRidgeRefinementSteps times against the unregularized residual. Controls
 * with no data support stay near zero; the rest converge to the plain
 * least-squares solution.
 *
 * Throws ArgumentError for nu or nv below 4, NumericError("underdetermined")
 * when there are fewer points than control values, and ArgumentError for a
 * degenerate bounding rectangle.
 */
SplineSurfaceModel fit_nurbs_surface(const geodata::PointSet3D& points, std::size_t nu, std::size_t nv,
                                     std::string_view attr = "z", double ridge = kNurbsRidge);

// De Boor evaluation in homogeneous coordinates. Throws ArgumentError
// ("outside domain") when (x, y) is outside the knot rectangle.
double evaluate_spline(const SplineSurfaceModel& model, double x, double y);

}  // namespace terra3d::stats
