#include "terra3d/stats/variogram.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "terra3d/error.hpp"

namespace terra3d::stats {

std::string_view to_string(VariogramKind kind) {
    switch (kind) {
        case VariogramKind::spherical:
            return "spherical";
        case VariogramKind::exponential:
            return "exponential";
        case VariogramKind::gaussian:
            return "gaussian";
        case VariogramKind::nugget:
            return "nugget";
    }
    return "spherical";
}

VariogramKind variogram_kind_from_string(std::string_view name) {
    for (const auto kind : {VariogramKind::spherical, VariogramKind::exponential, VariogramKind::gaussian,
                            VariogramKind::nugget}) {
        if (to_string(kind) == name) {
            return kind;
        }
    }
    throw ArgumentError("unknown variogram model '" + std::string(name) + "'");
}

namespace {

// Normalized structure function: 0 at h = 0, rising to 1 (or ~0.95 at the
// practical range for the asymptotic models).
double shape(VariogramKind kind, double h, double range) {
    const double r = h / range;
    switch (kind) {
        case VariogramKind::spherical:
            return r < 1.0 ? 1.5 * r - 0.5 * r * r * r : 1.0;
        case VariogramKind::exponential:
            return 1.0 - std::exp(-3.0 * r);
        case VariogramKind::gaussian:
            return 1.0 - std::exp(-3.0 * r * r);
        case VariogramKind::nugget:
            return 1.0;
    }
    return 1.0;
}

}  // namespace

double VariogramModel::operator()(double h) const {
    if (h <= 0.0) {
        return 0.0;
    }
    if (kind == VariogramKind::nugget) {
        return sill;
    }
    return nugget + (sill - nugget) * shape(kind, h, range);
}

void VariogramModel::validate() const {
    if (!(nugget >= 0.0) || !std::isfinite(nugget)) {
        throw ArgumentError("variogram nugget must be non-negative");
    }
    if (!(sill >= nugget) || !std::isfinite(sill)) {
        throw ArgumentError("variogram sill must be >= nugget");
    }
    if (!(range > 0.0) || !std::isfinite(range)) {
        throw ArgumentError("variogram range must be positive");
    }
}

std::vector<LagBin> empirical_semivariogram(const geodata::PointSet3D& points, std::string_view attr,
                                            std::size_t n_lags, double max_lag) {
    if (!(max_lag > 0.0) || !std::isfinite(max_lag)) {
        throw ArgumentError("max_lag must be positive");
    }
    if (n_lags == 0) {
        throw ArgumentError("n_lags must be positive");
    }
    if (points.size() < 2) {
        throw ArgumentError("semivariogram needs at least 2 points");
    }
    const auto z = points.attribute(attr);
    const double nl = static_cast<double>(n_lags);
    std::vector<double> sums(n_lags, 0.0);
    std::vector<std::size_t> counts(n_lags, 0);
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const double d = std::hypot(points[i].x - points[j].x, points[i].y - points[j].y);
            if (d <= 0.0 || d > max_lag) {
                continue;
            }
            // bin k covers (k w, (k+1) w]
            const double scaled = d * nl / max_lag;
            auto k = static_cast<std::size_t>(std::ceil(scaled));
            k = std::clamp<std::size_t>(k, 1, n_lags) - 1;
            const double diff = z[i] - z[j];
            sums[k] += diff * diff;
            ++counts[k];
        }
    }
    std::vector<LagBin> bins(n_lags);
    const double width = max_lag / nl;
    for (std::size_t k = 0; k < n_lags; ++k) {
        bins[k].lag_center = (static_cast<double>(k) + 0.5) * width;
        bins[k].pair_count = counts[k];
        if (counts[k] > 0) {
            bins[k].gamma = sums[k] / (2.0 * static_cast<double>(counts[k]));
        }
    }
    return bins;
}

namespace {

struct LinearFit {
    double nugget = 0.0;
    double partial_sill = 0.0;
    double sse = std::numeric_limits<double>::infinity();
};

// Weighted least squares for gamma ~ c0 + c1 f(h) with c0, c1 >= 0.
LinearFit fit_linear(std::span<const LagBin> bins, VariogramKind kind, double range) {
    double sw = 0, sf = 0, sff = 0, sg = 0, sfg = 0;
    for (const auto& b : bins) {
        if (!b.gamma) {
            continue;
        }
        const double w = static_cast<double>(b.pair_count);
        const double f = shape(kind, b.lag_center, range);
        sw += w;
        sf += w * f;
        sff += w * f * f;
        sg += w * *b.gamma;
        sfg += w * f * *b.gamma;
    }
    const auto sse_of = [&](double c0, double c1) {
        double s = 0.0;
        for (const auto& b : bins) {
            if (b.gamma) {
                const double e = *b.gamma - (c0 + c1 * shape(kind, b.lag_center, range));
                s += static_cast<double>(b.pair_count) * e * e;
            }
        }
        return s;
    };

    LinearFit best;
    const auto consider = [&](double c0, double c1) {
        if (c0 < 0.0 || c1 < 0.0) {
            return;
        }
        const double s = sse_of(c0, c1);
        if (s < best.sse) {
            best = {c0, c1, s};
        }
    };
    const double det = sw * sff - sf * sf;
    if (std::abs(det) > 1e-300) {
        consider((sg * sff - sf * sfg) / det, (sw * sfg - sf * sg) / det);
    }
    consider(sg / sw, 0.0);
    if (sff > 0.0) {
        consider(0.0, sfg / sff);
    }
    consider(0.0, 0.0);
    return best;
}

}  // namespace

VariogramModel fit_variogram(std::span<const LagBin> bins, VariogramKind kind, double max_lag,
                             double sample_variance) {
    if (!(max_lag > 0.0)) {
        throw ArgumentError("max_lag must be positive");
    }
    const bool any = std::any_of(bins.begin(), bins.end(), [](const LagBin& b) { return b.gamma.has_value(); });
    VariogramModel m;
    m.kind = kind;
    m.range = 0.5 * max_lag;
    if (!any) {
        m.sill = std::max(0.0, sample_variance);
        return m;
    }
    if (kind == VariogramKind::nugget) {
        const LinearFit f = fit_linear(bins, kind, m.range);
        m.nugget = 0.0;
        m.sill = f.nugget + f.partial_sill;
        return m;
    }

    // coarse scan, seeded at half max_lag, then golden-section refinement
    constexpr int kScan = 200;
    double best_range = m.range;
    LinearFit best = fit_linear(bins, kind, best_range);
    for (int i = 1; i <= kScan; ++i) {
        const double a = 2.0 * max_lag * i / kScan;
        const LinearFit f = fit_linear(bins, kind, a);
        if (f.sse < best.sse) {
            best = f;
            best_range = a;
        }
    }
    const double step = 2.0 * max_lag / kScan;
    double lo = std::max(best_range - step, 1e-9 * max_lag);
    double hi = best_range + step;
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - phi * (hi - lo);
    double x2 = lo + phi * (hi - lo);
    double f1 = fit_linear(bins, kind, x1).sse;
    double f2 = fit_linear(bins, kind, x2).sse;
    for (int it = 0; it < 60; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = fit_linear(bins, kind, x1).sse;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = fit_linear(bins, kind, x2).sse;
        }
    }
    const double refined = 0.5 * (lo + hi);
    const LinearFit rf = fit_linear(bins, kind, refined);
    if (rf.sse < best.sse) {
        best = rf;
        best_range = refined;
    }
    m.nugget = best.nugget;
    m.sill = best.nugget + best.partial_sill;
    m.range = best_range;
    return m;
}

}  // namespace terra3d::stats
