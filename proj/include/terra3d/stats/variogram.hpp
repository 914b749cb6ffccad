#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "terra3d/geodata/point_set.hpp"

namespace terra3d::stats {

enum class VariogramKind { spherical, exponential, gaussian, nugget };

std::string_view to_string(VariogramKind kind);
VariogramKind variogram_kind_from_string(std::string_view name);

/**
 * Isotropic semivariogram model. gamma(0) = 0; for h > 0
 *
 *   spherical    c0 + (c - c0) (1.5 h/a - 0.5 (h/a)^3) for h < a, else c
 *   exponential  c0 + (c - c0) (1 - exp(-3 h / a))
 *   gaussian     c0 + (c - c0) (1 - exp(-3 h^2 / a^2))
 *   nugget       c
 *
 * with c0 = nugget, c = sill, a = range. Exponential and gaussian use the
 * practical range (95% of the partial sill reached at h = a).
 */
struct VariogramModel {
    VariogramKind kind = VariogramKind::spherical;
    double nugget = 0.0;
    double sill = 1.0;
    double range = 1.0;

    double operator()(double h) const;

    // Throws ArgumentError unless nugget >= 0, sill >= nugget, range > 0.
    void validate() const;
};

struct LagBin {
    double lag_center = 0.0;
    std::optional<double> gamma;  // empty when pair_count == 0
    std::size_t pair_count = 0;
};

/**
 * Classical (Matheron) estimator gamma(h) = sum (z_i - z_j)^2 / (2 N_h) over
 * point pairs whose planimetric distance falls in each of n_lags equal-width
 * bins on (0, max_lag]. Pairs farther than max_lag are ignored.
 */
std::vector<LagBin> empirical_semivariogram(const geodata::PointSet3D& points, std::string_view attr,
                                            std::size_t n_lags, double max_lag);

/**
 * Weighted least-squares fit of a model to the empirical bins, pair counts as
 * weights. For each candidate range the nugget and partial sill enter
 * linearly and are solved in closed form under non-negativity; the range is
 * chosen by a grid scan over (0, 2 max_lag] refined by golden-section search.
 * `sample_variance` is the fallback sill when every bin is empty.
 */
VariogramModel fit_variogram(std::span<const LagBin> bins, VariogramKind kind, double max_lag,
                             double sample_variance);

}  // namespace terra3d::stats
