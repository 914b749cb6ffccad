#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "terra3d/geodata/point_set.hpp"
#include "terra3d/geodata/raster_grid.hpp"
#include "terra3d/stats/variogram.hpp"

namespace terra3d::stats {

struct KrigingResult {
    double estimate = 0.0;
    double variance = 0.0;
    std::vector<double> weights;  // one per sample, in input order
};

/**
 * Ordinary Kriging over the global neighborhood.
 *
 * Factorizes the (n+1)x(n+1) system [Gamma 1; 1^T 0] once at construction;
 * each query solves for [w; mu] against [gamma_0; 1]. Estimate is sum w_i z_i
 * and variance is sum w_i gamma_0i + mu. Queries within 1e-12 of a sample
 * return that sample with variance equal to the nugget.
 */
class OrdinaryKriging {
public:
    // Throws ArgumentError for fewer than 2 samples or an invalid model and
    // NumericError when the system is singular.
    OrdinaryKriging(const geodata::PointSet3D& points, std::string_view attr, VariogramModel model);

    KrigingResult estimate(geodata::WorldPoint query) const;

    const VariogramModel& model() const { return model_; }

private:
    VariogramModel model_;
    std::vector<geodata::WorldPoint> sites_;
    Eigen::VectorXd values_;
    Eigen::FullPivLU<Eigen::MatrixXd> lu_;
};

KrigingResult krige(const geodata::PointSet3D& points, std::string_view attr, const VariogramModel& model,
                    geodata::WorldPoint query);

}  // namespace terra3d::stats
