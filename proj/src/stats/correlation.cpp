#include "terra3d/stats/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "terra3d/error.hpp"

namespace terra3d::stats {

Eigen::MatrixXd correlation_matrix(const geodata::PointSet3D& points, std::span<const std::string> attrs) {
    if (points.size() < 2) {
        throw ArgumentError("correlation needs at least 2 points");
    }
    const std::size_t n = points.size();
    const std::size_t k = attrs.size();

    std::vector<std::vector<double>> centered;
    std::vector<double> norms;
    std::string zero_variance;
    for (const auto& name : attrs) {
        const auto col = points.attribute(name);
        double mean = 0.0;
        for (const double v : col) {
            mean += v;
        }
        mean /= static_cast<double>(n);
        std::vector<double> c(col.begin(), col.end());
        double ss = 0.0;
        for (double& v : c) {
            v -= mean;
            ss += v * v;
        }
        if (!(ss > 0.0)) {
            zero_variance += (zero_variance.empty() ? "" : ", ") + name;
        }
        centered.push_back(std::move(c));
        norms.push_back(std::sqrt(ss));
    }
    if (!zero_variance.empty()) {
        throw ArgumentError("zero-variance attribute(s): " + zero_variance);
    }

    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = a + 1; b < k; ++b) {
            double sab = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                sab += centered[a][i] * centered[b][i];
            }
            const double v = std::clamp(sab / (norms[a] * norms[b]), -1.0, 1.0);
            r(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = v;
            r(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = v;
        }
    }
    return r;
}

}  // namespace terra3d::stats
