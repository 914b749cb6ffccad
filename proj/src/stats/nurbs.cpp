#include "terra3d/stats/nurbs.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "terra3d/error.hpp"

namespace terra3d::stats {

std::vector<double> clamped_uniform_knots(std::size_t n_control, int degree, double lo, double hi) {
    const auto p = static_cast<std::size_t>(degree);
    if (n_control < p + 1) {
        throw ArgumentError("need at least degree + 1 control points");
    }
    std::vector<double> knots(n_control + p + 1);
    const std::size_t spans = n_control - p;
    for (std::size_t i = 0; i <= p; ++i) {
        knots[i] = lo;
        knots[n_control + i] = hi;
    }
    for (std::size_t j = 1; j < spans; ++j) {
        knots[p + j] = lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(spans);
    }
    return knots;
}

std::size_t find_knot_span(std::span<const double> knots, int degree, std::size_t n_control, double u) {
    const auto p = static_cast<std::size_t>(degree);
    if (u >= knots[n_control]) {
        return n_control - 1;
    }
    if (u <= knots[p]) {
        return p;
    }
    std::size_t low = p;
    std::size_t high = n_control;
    std::size_t mid = (low + high) / 2;
    while (u < knots[mid] || u >= knots[mid + 1]) {
        if (u < knots[mid]) {
            high = mid;
        } else {
            low = mid;
        }
        mid = (low + high) / 2;
    }
    return mid;
}

namespace {

// Nonzero basis values N_{span-p..span}(u).
std::vector<double> local_basis(std::span<const double> knots, int degree, std::size_t span, double u) {
    const auto p = static_cast<std::size_t>(degree);
    std::vector<double> n(p + 1, 0.0), left(p + 1, 0.0), right(p + 1, 0.0);
    n[0] = 1.0;
    for (std::size_t j = 1; j <= p; ++j) {
        left[j] = u - knots[span + 1 - j];
        right[j] = knots[span + j] - u;
        double saved = 0.0;
        for (std::size_t r = 0; r < j; ++r) {
            const double tmp = n[r] / (right[r + 1] + left[j - r]);
            n[r] = saved + right[r + 1] * tmp;
            saved = left[j - r] * tmp;
        }
        n[j] = saved;
    }
    return n;
}

struct Homogeneous {
    double wz = 0.0;
    double w = 0.0;
};

// De Boor's algorithm on homogeneous control points d[0..p] for the span.
Homogeneous de_boor(std::span<const double> knots, std::size_t p, std::size_t span, double u,
                    std::vector<Homogeneous> d) {
    for (std::size_t r = 1; r <= p; ++r) {
        for (std::size_t j = p; j >= r; --j) {
            const double lo = knots[j + span - p];
            const double hi = knots[j + 1 + span - r];
            const double alpha = hi > lo ? (u - lo) / (hi - lo) : 0.0;
            d[j].wz = (1.0 - alpha) * d[j - 1].wz + alpha * d[j].wz;
            d[j].w = (1.0 - alpha) * d[j - 1].w + alpha * d[j].w;
        }
    }
    return d[p];
}

}  // namespace

std::vector<double> bspline_basis(std::span<const double> knots, int degree, std::size_t n_control, double u) {
    const std::size_t span = find_knot_span(knots, degree, n_control, u);
    const auto local = local_basis(knots, degree, span, u);
    std::vector<double> all(n_control, 0.0);
    for (std::size_t i = 0; i < local.size(); ++i) {
        all[span - static_cast<std::size_t>(degree) + i] = local[i];
    }
    return all;
}

SplineSurfaceModel fit_nurbs_surface(const geodata::PointSet3D& points, std::size_t nu, std::size_t nv,
                                     std::string_view attr, double ridge) {
    constexpr int kDegree = 3;
    if (nu < 4 || nv < 4) {
        throw ArgumentError("bicubic control net needs at least 4x4 control values");
    }
    if (points.size() < nu * nv) {
        throw NumericError("underdetermined: " + std::to_string(nu * nv) + " control values but only " +
                           std::to_string(points.size()) + " points");
    }
    const auto z = points.attribute(attr);

    double xmin = points[0].x, xmax = xmin, ymin = points[0].y, ymax = ymin;
    for (const auto& p : points.points()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    if (!(xmax > xmin) || !(ymax > ymin)) {
        throw ArgumentError("degenerate bounding rectangle: points must span both x and y");
    }

    SplineSurfaceModel model;
    model.nu = nu;
    model.nv = nv;
    model.knots_u = clamped_uniform_knots(nu, kDegree, xmin, xmax);
    model.knots_v = clamped_uniform_knots(nv, kDegree, ymin, ymax);

    const auto ncp = static_cast<Eigen::Index>(nu * nv);
    Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(ncp, ncp);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ncp);

    struct Row {
        std::array<Eigen::Index, 16> col;
        std::array<double, 16> val;
    };
    std::vector<Row> rows(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto su = find_knot_span(model.knots_u, kDegree, nu, points[i].x);
        const auto sv = find_knot_span(model.knots_v, kDegree, nv, points[i].y);
        const auto bu = local_basis(model.knots_u, kDegree, su, points[i].x);
        const auto bv = local_basis(model.knots_v, kDegree, sv, points[i].y);
        Row& row = rows[i];
        std::size_t k = 0;
        for (std::size_t a = 0; a <= 3; ++a) {
            for (std::size_t b = 0; b <= 3; ++b) {
                row.col[k] = static_cast<Eigen::Index>((su - 3 + a) * nv + (sv - 3 + b));
                row.val[k] = bu[a] * bv[b];
                ++k;
            }
        }
        for (std::size_t r = 0; r < 16; ++r) {
            rhs(row.col[r]) += row.val[r] * z[i];
            for (std::size_t c = 0; c < 16; ++c) {
                normal(row.col[r], row.col[c]) += row.val[r] * row.val[c];
            }
        }
    }
    normal.diagonal().array() += ridge;

    Eigen::LDLT<Eigen::MatrixXd> ldlt(normal);
    if (ldlt.info() != Eigen::Success) {
        throw NumericError("spline normal equations could not be factorized");
    }
    // Iterated Tikhonov: each step re-solves for the remaining normal-equation
    // residual, so the ridge stabilizes controls without data support but does
    // not bias well-determined ones toward zero.
    Eigen::VectorXd c = ldlt.solve(rhs);
    for (int step = 0; step < kRidgeRefinementSteps; ++step) {
        const Eigen::VectorXd gap = rhs - (normal * c - ridge * c);
        c += ldlt.solve(gap);
    }
    model.control.assign(c.data(), c.data() + c.size());
    model.weights.assign(nu * nv, 1.0);

    double ss = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        double fit = 0.0;
        for (std::size_t k = 0; k < 16; ++k) {
            fit += rows[i].val[k] * c(rows[i].col[k]);
        }
        ss += (z[i] - fit) * (z[i] - fit);
    }
    model.residual_rms = std::sqrt(ss / static_cast<double>(points.size()));
    return model;
}

double evaluate_spline(const SplineSurfaceModel& model, double x, double y) {
    if (!(x >= model.x_min() && x <= model.x_max() && y >= model.y_min() && y <= model.y_max())) {
        throw ArgumentError("outside domain: (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
    const auto pu = static_cast<std::size_t>(model.degree_u);
    const auto pv = static_cast<std::size_t>(model.degree_v);
    const std::size_t su = find_knot_span(model.knots_u, model.degree_u, model.nu, x);
    const std::size_t sv = find_knot_span(model.knots_v, model.degree_v, model.nv, y);

    std::vector<Homogeneous> column(pu + 1);
    std::vector<Homogeneous> row(pv + 1);
    for (std::size_t i = 0; i <= pu; ++i) {
        const std::size_t a = su - pu + i;
        for (std::size_t j = 0; j <= pv; ++j) {
            const std::size_t idx = a * model.nv + (sv - pv + j);
            const double w = model.weights.empty() ? 1.0 : model.weights[idx];
            row[j] = {w * model.control[idx], w};
        }
        column[i] = de_boor(model.knots_v, pv, sv, y, row);
    }
    const Homogeneous h = de_boor(model.knots_u, pu, su, x, column);
    return h.wz / h.w;
}

}  // namespace terra3d::stats
