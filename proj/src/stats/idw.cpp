#include "terra3d/stats/idw.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <vector>

#include "terra3d/error.hpp"

namespace terra3d::stats {

namespace {

struct Candidate {
    double distance;
    double x;
    double y;
    double value;
};

}  // namespace

double idw_interpolate(const geodata::PointSet3D& points, std::string_view attr, geodata::WorldPoint query,
                       const IdwOptions& opts) {
    if (points.empty()) {
        throw ArgumentError("IDW needs at least one sample (empty point set)");
    }
    if (!(opts.power > 0.0) || !std::isfinite(opts.power)) {
        throw ArgumentError("IDW power must be positive");
    }
    if (opts.k_neighbors && *opts.k_neighbors == 0) {
        throw ArgumentError("IDW k_neighbors must be positive");
    }
    const auto values = points.attribute(attr);

    std::vector<Candidate> cand;
    cand.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        cand.push_back({std::hypot(p.x - query.x, p.y - query.y), p.x, p.y, values[i]});
    }
    const auto key = [](const Candidate& c) { return std::tie(c.distance, c.x, c.y); };
    const std::size_t k = std::min(opts.k_neighbors.value_or(cand.size()), cand.size());
    std::partial_sort(cand.begin(), cand.begin() + static_cast<long>(k), cand.end(),
                      [&](const Candidate& a, const Candidate& b) { return key(a) < key(b); });

    if (cand.front().distance < kExactHitDistance) {
        return cand.front().value;
    }
    // Weights relative to the nearest sample: same ratios, no overflow.
    const double nearest = cand.front().distance;
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double w = std::pow(nearest / cand[i].distance, opts.power);
        num += w * cand[i].value;
        den += w;
    }
    // Guard against rounding pushing the convex combination past its bounds.
    const auto [lo, hi] = std::minmax_element(cand.begin(), cand.begin() + static_cast<long>(k),
                                              [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
    return std::clamp(num / den, lo->value, hi->value);
}

}  // namespace terra3d::stats
