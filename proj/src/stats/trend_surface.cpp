#include "terra3d/stats/trend_surface.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "terra3d/error.hpp"

namespace terra3d::stats {

namespace {

void check_degree(int degree) {
    if (degree < 1 || degree > 3) {
        throw ArgumentError("trend surface degree must be in [1, 3], got " + std::to_string(degree));
    }
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) {
        b = b * (n - k + i) / i;
    }
    return b;
}

std::size_t monomial_index(int i, int j) {
    // total degree d = i + j occupies slots [d(d+1)/2, ...), x power descending
    const int d = i + j;
    return static_cast<std::size_t>(d * (d + 1) / 2 + (d - i));
}

double evaluate_monomials(const std::vector<double>& coeffs, int degree, double u, double v) {
    double sum = 0.0;
    std::size_t k = 0;
    for (int d = 0; d <= degree; ++d) {
        for (int i = d; i >= 0; --i) {
            sum += coeffs[k++] * std::pow(u, i) * std::pow(v, d - i);
        }
    }
    return sum;
}

// Re-expresses sum c_ij u^i v^j, u = (x - cx)/sx, v = (y - cy)/sy, in powers
// of x and y by binomial expansion.
std::vector<double> to_world_frame(const std::vector<double>& frame_coeffs, int degree, const CoordinateFrame& f) {
    std::vector<double> world(frame_coeffs.size(), 0.0);
    for (const auto& [i, j] : trend_monomials(degree)) {
        const double c = frame_coeffs[monomial_index(i, j)] / (std::pow(f.sx, i) * std::pow(f.sy, j));
        for (int a = 0; a <= i; ++a) {
            const double xa = binomial(i, a) * std::pow(-f.cx, i - a);
            for (int b = 0; b <= j; ++b) {
                const double yb = binomial(j, b) * std::pow(-f.cy, j - b);
                world[monomial_index(a, b)] += c * xa * yb;
            }
        }
    }
    return world;
}

}  // namespace

std::size_t trend_coefficient_count(int degree) {
    check_degree(degree);
    return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}

std::vector<std::pair<int, int>> trend_monomials(int degree) {
    check_degree(degree);
    std::vector<std::pair<int, int>> out;
    for (int d = 0; d <= degree; ++d) {
        for (int i = d; i >= 0; --i) {
            out.emplace_back(i, d - i);
        }
    }
    return out;
}

TrendSurfaceModel TrendSurfaceModel::from_coefficients(int degree, std::vector<double> coefficients) {
    if (coefficients.size() != trend_coefficient_count(degree)) {
        throw ArgumentError("degree " + std::to_string(degree) + " needs " +
                            std::to_string(trend_coefficient_count(degree)) + " coefficients, got " +
                            std::to_string(coefficients.size()));
    }
    TrendSurfaceModel m;
    m.degree = degree;
    m.frame_coefficients = coefficients;
    m.coefficients = std::move(coefficients);
    return m;
}

TrendSurfaceModel fit_trend_surface(const geodata::PointSet3D& points, int degree, std::string_view attr) {
    const std::size_t ncoef = trend_coefficient_count(degree);
    const std::size_t n = points.size();
    if (n < ncoef) {
        throw NumericError("underdetermined: degree " + std::to_string(degree) + " needs at least " +
                           std::to_string(ncoef) + " points, got " + std::to_string(n));
    }
    const auto z = points.attribute(attr);

    double xmin = points[0].x, xmax = xmin, ymin = points[0].y, ymax = ymin;
    for (const auto& p : points.points()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    CoordinateFrame frame;
    frame.cx = 0.5 * (xmin + xmax);
    frame.cy = 0.5 * (ymin + ymax);
    frame.sx = xmax > xmin ? xmax - xmin : 1.0;
    frame.sy = ymax > ymin ? ymax - ymin : 1.0;

    const auto monomials = trend_monomials(degree);
    Eigen::MatrixXd design(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(ncoef));
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
    for (std::size_t r = 0; r < n; ++r) {
        const double u = (points[r].x - frame.cx) / frame.sx;
        const double v = (points[r].y - frame.cy) / frame.sy;
        for (std::size_t c = 0; c < ncoef; ++c) {
            design(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                std::pow(u, monomials[c].first) * std::pow(v, monomials[c].second);
        }
        rhs(static_cast<Eigen::Index>(r)) = z[r];
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (static_cast<std::size_t>(qr.rank()) < ncoef) {
        throw NumericError("rank-deficient design matrix: rank " + std::to_string(qr.rank()) + " < " +
                           std::to_string(ncoef) + " (points too close to collinear for degree " +
                           std::to_string(degree) + ")");
    }
    const Eigen::VectorXd solution = qr.solve(rhs);

    TrendSurfaceModel model;
    model.degree = degree;
    model.frame = frame;
    model.frame_coefficients.assign(solution.data(), solution.data() + solution.size());
    model.coefficients = to_world_frame(model.frame_coefficients, degree, frame);

    const Eigen::VectorXd residual = rhs - design * solution;
    const double ss_res = residual.squaredNorm();
    const double mean = rhs.mean();
    const double ss_tot = (rhs.array() - mean).square().sum();
    if (ss_res <= 1e-12 * std::max(1.0, ss_tot) || ss_tot <= 0.0) {
        model.r_squared = 1.0;
    } else {
        model.r_squared = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    }
    model.residual_rms = std::sqrt(ss_res / static_cast<double>(n));
    return model;
}

double evaluate_trend_surface(const TrendSurfaceModel& model, double x, double y) {
    const auto& f = model.frame;
    return evaluate_monomials(model.frame_coefficients, model.degree, (x - f.cx) / f.sx, (y - f.cy) / f.sy);
}

}  // namespace terra3d::stats
