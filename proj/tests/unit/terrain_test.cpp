#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "support/oracles.hpp"
#include "terra3d/geodata.hpp"
#include "terra3d/terrain.hpp"

using namespace terra3d;
using namespace terra3d::terrain;
using geodata::GridSpec;
using terra3d::testing::Quadratic;

namespace {

RasterGrid sample(const GridSpec& spec, const std::function<double(double, double)>& h) {
    auto g = RasterGrid::filled(spec, -9999, 0.0);
    for (std::size_t r = 0; r < spec.nrows; ++r) {
        for (std::size_t c = 0; c < spec.ncols; ++c) {
            const auto p = spec.cell_center(r, c);
            g.set(r, c, h(p.x, p.y));
        }
    }
    return g;
}

// 5x5 unit grid whose cell (2, 2) is centered at world (1, 0).
const GridSpec kAroundOneZero{-1.5, -2.5, 1.0, 5, 5};

}  // namespace

TEST(SurfaceDerivatives, ExactOnAffinePlane) {
    const auto g = sample({0, 0, 0.5, 6, 6}, [](double x, double y) { return 2 * x + 3 * y; });
    for (std::size_t r = 1; r < 5; ++r) {
        for (std::size_t c = 1; c < 5; ++c) {
            const auto d = surface_derivatives(g, r, c);
            ASSERT_TRUE(d);
            EXPECT_NEAR(d->p, 2.0, 1e-12);
            EXPECT_NEAR(d->q, 3.0, 1e-12);
            EXPECT_NEAR(d->r, 0.0, 1e-10);
            EXPECT_NEAR(d->s, 0.0, 1e-10);
            EXPECT_NEAR(d->t, 0.0, 1e-10);
        }
    }
}

TEST(SurfaceDerivatives, ExactOnParaboloidAtOneZero) {
    const auto g = sample(kAroundOneZero, [](double x, double y) { return (x * x + y * y) / 2; });
    const auto center = g.cell_center(2, 2);
    ASSERT_DOUBLE_EQ(center.x, 1.0);
    ASSERT_DOUBLE_EQ(center.y, 0.0);
    const auto d = surface_derivatives(g, 2, 2);
    ASSERT_TRUE(d);
    EXPECT_DOUBLE_EQ(d->p, 1.0);
    EXPECT_DOUBLE_EQ(d->q, 0.0);
    EXPECT_DOUBLE_EQ(d->r, 1.0);
    EXPECT_DOUBLE_EQ(d->s, 0.0);
    EXPECT_DOUBLE_EQ(d->t, 1.0);
}

TEST(SurfaceDerivatives, BorderAndOutOfBounds) {
    const auto g = RasterGrid::filled({0, 0, 1, 4, 3}, -9999, 1.0);
    EXPECT_FALSE(surface_derivatives(g, 0, 1));
    EXPECT_FALSE(surface_derivatives(g, 1, 0));
    EXPECT_FALSE(surface_derivatives(g, 2, 2));
    EXPECT_FALSE(surface_derivatives(g, 1, 3));
    EXPECT_TRUE(surface_derivatives(g, 1, 1));
    EXPECT_THROW(surface_derivatives(g, 3, 0), std::out_of_range);
    EXPECT_THROW(surface_derivatives(g, 0, 4), std::out_of_range);
}

TEST(Slope, FlatPlaneIsZero) {
    const auto s = slope(RasterGrid::filled({0, 0, 1, 5, 5}, -9999, 12.0));
    for (std::size_t r = 1; r < 4; ++r)
        for (std::size_t c = 1; c < 4; ++c) EXPECT_EQ(s.at(r, c), 0.0);
    EXPECT_TRUE(s.is_missing(0, 0));
}

TEST(Slope, KnownPlanes) {
    const auto s = slope(sample({0, 0, 1, 5, 5}, [](double x, double y) { return 2 * x + 3 * y; }));
    EXPECT_NEAR(s.at(2, 2), 74.498640433063, 1e-9);
    EXPECT_NEAR(s.at(2, 2), std::atan(std::sqrt(13.0)) * 180 / M_PI, 1e-12);
    const auto s45 = slope(sample({0, 0, 2, 5, 5}, [](double x, double) { return x; }));
    EXPECT_NEAR(s45.at(1, 3), 45.0, 1e-12);
}

TEST(Aspect, KnownGradients) {
    EXPECT_DOUBLE_EQ(aspect_degrees({1, 0, 0, 0, 0}), 270.0);
    EXPECT_DOUBLE_EQ(aspect_degrees({1, 1, 0, 0, 0}), 225.0);
    EXPECT_DOUBLE_EQ(aspect_degrees({0, 0, 0, 0, 0}), -1.0);
    EXPECT_DOUBLE_EQ(aspect_degrees({0, 0, 0, 0, 0}, {.aspect_flat_sentinel = -2}), -2.0);
}

TEST(Aspect, MatchesSingleArgumentFormWhenPPositive) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int i = 0; i < 200; ++i) {
        const double p = std::abs(u(rng)) + 1e-3;
        const double q = u(rng);
        const double single_arg = 180.0 - std::atan(q / p) * 180 / M_PI + 90.0;
        EXPECT_NEAR(aspect_degrees({p, q, 0, 0, 0}), single_arg, 1e-9);
    }
}

TEST(Aspect, RangeCoversAllQuadrants) {
    for (double p : {-1.0, 0.0, 1.0}) {
        for (double q : {-1.0, 0.0, 1.0}) {
            const double a = aspect_degrees({p, q, 0, 0, 0});
            if (p == 0 && q == 0) {
                EXPECT_EQ(a, -1.0);
            } else {
                EXPECT_GE(a, 0.0);
                EXPECT_LT(a, 360.0);
            }
        }
    }
    EXPECT_DOUBLE_EQ(aspect_degrees({-1, 0, 0, 0, 0}), 90.0);
    EXPECT_DOUBLE_EQ(aspect_degrees({0, 1, 0, 0, 0}), 180.0);
    EXPECT_DOUBLE_EQ(aspect_degrees({0, -1, 0, 0, 0}), 0.0);
}

TEST(Curvature, ParaboloidAtOneZero) {
    const auto g = sample(kAroundOneZero, [](double x, double y) { return (x * x + y * y) / 2; });
    EXPECT_NEAR(plane_curvature(g).at(2, 2), -1.0, 1e-12);
    EXPECT_NEAR(profile_curvature(g).at(2, 2), -1.0 / (2.0 * std::sqrt(2.0)), 1e-12);
    EXPECT_NEAR(profile_curvature(g).at(2, 2), -0.3535534, 1e-7);
}

TEST(Curvature, ZeroOnPlanesAndFlats) {
    const auto plane = sample({0, 0, 1, 6, 6}, [](double x, double y) { return -0.5 * x + 4 * y + 7; });
    const auto flat = RasterGrid::filled({0, 0, 1, 6, 6}, -9999, 3.0);
    for (const auto& g : {plane, flat}) {
        const auto cc = plane_curvature(g);
        const auto cp = profile_curvature(g);
        for (std::size_t r = 1; r < 5; ++r) {
            for (std::size_t c = 1; c < 5; ++c) {
                EXPECT_NEAR(cc.at(r, c), 0.0, 1e-9);
                EXPECT_NEAR(cp.at(r, c), 0.0, 1e-9);
            }
        }
    }
}

TEST(Terrain, OutputKeepsGeoreferencing) {
    const auto dem = geodata::load_raster(terra3d::testing::fixture("dem.asc"));
    for (const auto& out : {slope(dem), aspect(dem), plane_curvature(dem), profile_curvature(dem)}) {
        EXPECT_EQ(out.spec(), dem.spec());
        EXPECT_EQ(out.nodata_value(), dem.nodata_value());
    }
}

TEST(Terrain, ElevationShiftInvariance) {
    const auto dem = geodata::load_raster(terra3d::testing::fixture("dem.asc"));
    std::vector<double> shifted(dem.values().begin(), dem.values().end());
    for (auto& v : shifted)
        if (v != dem.nodata_value()) v += 1234.5;
    const RasterGrid up(dem.spec(), dem.nodata_value(), shifted);
    using Fn = RasterGrid (*)(const RasterGrid&, const TerrainOptions&);
    for (Fn fn : {Fn(&slope), Fn(&aspect), Fn(&plane_curvature), Fn(&profile_curvature)}) {
        const auto a = fn(dem, {});
        const auto b = fn(up, {});
        for (std::size_t i = 0; i < a.values().size(); ++i) {
            ASSERT_EQ(a.is_missing_value(a.values()[i]), b.is_missing_value(b.values()[i]));
            if (!a.is_missing_value(a.values()[i])) {
                ASSERT_NEAR(a.values()[i], b.values()[i], 1e-6 * std::max(1.0, std::abs(a.values()[i])));
            }
        }
    }
}

TEST(Terrain, RangesOnRealisticDem) {
    const auto dem = geodata::load_raster(terra3d::testing::fixture("dem.asc"));
    const auto s = slope(dem);
    const auto a = aspect(dem);
    for (std::size_t i = 0; i < s.values().size(); ++i) {
        if (s.is_missing_value(s.values()[i])) continue;
        EXPECT_GE(s.values()[i], 0.0);
        EXPECT_LT(s.values()[i], 90.0);
        const double av = a.values()[i];
        EXPECT_TRUE(av == -1.0 || (av >= 0.0 && av < 360.0));
    }
}

TEST(Terrain, NodataPropagatesToNineCells) {
    auto g = RasterGrid::filled({0, 0, 1, 7, 7}, -9999, 0.0);
    for (std::size_t r = 0; r < 7; ++r)
        for (std::size_t c = 0; c < 7; ++c) g.set(r, c, 0.1 * r + 0.2 * c * c);
    g.set_missing(3, 3);
    const auto s = slope(g);
    for (std::size_t r = 1; r < 6; ++r) {
        for (std::size_t c = 1; c < 6; ++c) {
            const bool touches = r >= 2 && r <= 4 && c >= 2 && c <= 4;
            EXPECT_EQ(s.is_missing(r, c), touches) << r << "," << c;
        }
    }
}

TEST(Terrain, QuadraticExactnessAgainstClosedForm) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coef(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        Quadratic f;
        for (double& c : f.c) c = coef(rng);
        const GridSpec spec{-3.0, -2.0, 0.25, 12, 10};
        const auto g = sample(spec, [&](double x, double y) { return f(x, y); });
        for (std::size_t r = 1; r + 1 < spec.nrows; ++r) {
            for (std::size_t c = 1; c + 1 < spec.ncols; ++c) {
                const auto d = surface_derivatives(g, r, c);
                ASSERT_TRUE(d);
                const auto w = spec.cell_center(r, c);
                EXPECT_NEAR(d->p, f.p(w.x, w.y), 1e-9 * std::max(1.0, std::abs(f.p(w.x, w.y))));
                EXPECT_NEAR(d->q, f.q(w.x, w.y), 1e-9 * std::max(1.0, std::abs(f.q(w.x, w.y))));
                EXPECT_NEAR(d->r, f.r(), 1e-9 * std::max(1.0, std::abs(f.r())));
                EXPECT_NEAR(d->s, f.s(), 1e-9 * std::max(1.0, std::abs(f.s())));
                EXPECT_NEAR(d->t, f.t(), 1e-9 * std::max(1.0, std::abs(f.t())));
            }
        }
    }
}

TEST(Terrain, RejectsNegativeFlatEpsilon) {
    const auto g = RasterGrid::filled({0, 0, 1, 3, 3}, -9999, 0.0);
    EXPECT_THROW(slope(g, {.curvature_flat_epsilon = -1}), ArgumentError);
}
