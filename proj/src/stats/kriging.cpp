#include "terra3d/stats/kriging.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "terra3d/error.hpp"
#include "terra3d/stats/idw.hpp"

namespace terra3d::stats {

OrdinaryKriging::OrdinaryKriging(const geodata::PointSet3D& points, std::string_view attr, VariogramModel model)
    : model_(model) {
    if (points.empty()) {
        throw ArgumentError("kriging needs samples (empty point set)");
    }
    if (points.size() < 2) {
        throw ArgumentError("kriging needs at least 2 samples");
    }
    model_.validate();
    const auto z = points.attribute(attr);
    const auto n = static_cast<Eigen::Index>(points.size());
    sites_.reserve(points.size());
    values_.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& p = points[static_cast<std::size_t>(i)];
        sites_.push_back({p.x, p.y});
        values_(i) = z[static_cast<std::size_t>(i)];
    }

    Eigen::MatrixXd system(n + 1, n + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& a = sites_[static_cast<std::size_t>(i)];
            const auto& b = sites_[static_cast<std::size_t>(j)];
            system(i, j) = i == j ? 0.0 : model_(std::hypot(a.x - b.x, a.y - b.y));
        }
        system(i, n) = 1.0;
        system(n, i) = 1.0;
    }
    system(n, n) = 0.0;
    lu_.compute(system);
    if (!lu_.isInvertible()) {
        throw NumericError("singular kriging system (rank " + std::to_string(lu_.rank()) + " of " +
                           std::to_string(n + 1) + ")");
    }
}

KrigingResult OrdinaryKriging::estimate(geodata::WorldPoint query) const {
    const auto n = static_cast<Eigen::Index>(sites_.size());
    KrigingResult result;

    Eigen::VectorXd rhs(n + 1);
    Eigen::Index nearest = 0;
    double nearest_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto& s = sites_[static_cast<std::size_t>(i)];
        const double d = std::hypot(s.x - query.x, s.y - query.y);
        if (d < nearest_d) {
            nearest_d = d;
            nearest = i;
        }
        rhs(i) = model_(d);
    }
    rhs(n) = 1.0;

    if (nearest_d < kExactHitDistance) {
        result.weights.assign(static_cast<std::size_t>(n), 0.0);
        result.weights[static_cast<std::size_t>(nearest)] = 1.0;
        result.estimate = values_(nearest);
        result.variance = model_.nugget;
        return result;
    }

    const Eigen::VectorXd sol = lu_.solve(rhs);
    const auto w = sol.head(n);
    const double mu = sol(n);
    result.weights.assign(w.data(), w.data() + n);
    result.estimate = w.dot(values_);
    result.variance = std::max(0.0, w.dot(rhs.head(n)) + mu);
    return result;
}

KrigingResult krige(const geodata::PointSet3D& points, std::string_view attr, const VariogramModel& model,
                    geodata::WorldPoint query) {
    return OrdinaryKriging(points, attr, model).estimate(query);
}

}  // namespace terra3d::stats
