#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fbp/boundary_geometry.hpp"
#include "fbp/errors.hpp"
#include "polar_oracle.hpp"

namespace {

using fbp::PolarCurve;

constexpr double kPi = std::numbers::pi;

// Curvature of the parametric curve (rho cos t, rho sin t) with rho and its
// derivatives evaluated from an explicit shape.
double parametric_curvature(double rho, double rho_t, double rho_tt, double t) {
    const double x1 = rho_t * std::cos(t) - rho * std::sin(t);
    const double y1 = rho_t * std::sin(t) + rho * std::cos(t);
    const double x2 = rho_tt * std::cos(t) - 2.0 * rho_t * std::sin(t) - rho * std::cos(t);
    const double y2 = rho_tt * std::sin(t) + 2.0 * rho_t * std::cos(t) - rho * std::sin(t);
    return (x1 * y2 - y1 * x2) / std::pow(x1 * x1 + y1 * y1, 1.5);
}

TEST(Curvature, Circle) {
    const PolarCurve c = PolarCurve::mode(2.0, 0.0, 3);
    for (int j = 0; j < 16; ++j) {
        EXPECT_DOUBLE_EQ(fbp::curvature_exact(c, 2 * kPi * j / 16), 0.5);
        for (int order = 1; order <= 3; ++order) {
            EXPECT_DOUBLE_EQ(fbp::curvature_expansion(c, 2 * kPi * j / 16, order), 0.5);
        }
    }
}

TEST(Curvature, MatchesParametricFormula) {
    const PolarCurve c = PolarCurve::mode(2.0, 0.1, 2);
    for (int j = 0; j < 64; ++j) {
        const double t = 2 * kPi * j / 64;
        const double rho = 2.0 + 0.1 * std::cos(2 * t);
        const double rho_t = -0.2 * std::sin(2 * t);
        const double rho_tt = -0.4 * std::cos(2 * t);
        EXPECT_NEAR(fbp::curvature_exact(c, t), parametric_curvature(rho, rho_t, rho_tt, t), 1e-10);
    }
}

TEST(Curvature, FirstOrderSmallEps) {
    const double eps = 1e-6;
    const PolarCurve c = PolarCurve::mode(1.0, eps, 3);
    for (int j = 0; j < 32; ++j) {
        const double t = 2 * kPi * j / 32;
        EXPECT_NEAR(fbp::curvature_exact(c, t), 1.0 + 8.0 * eps * std::cos(3 * t), 50.0 * eps * eps);
    }
}

TEST(Curvature, SecondOrderCoefficientAtZero) {
    for (int n = 1; n <= 6; ++n) {
        const double R = 1.5;
        const double eps = 0.37;
        const PolarCurve c = PolarCurve::mode(R, eps, n);
        const double k2 = (fbp::curvature_expansion(c, 0.0, 2) - fbp::curvature_expansion(c, 0.0, 1)) / (eps * eps);
        EXPECT_NEAR(k2, (1.0 - 2.0 * n * n) / (R * R * R), 1e-12);
    }
}

TEST(Curvature, Errors) {
    const PolarCurve c = PolarCurve::mode(1.0, 0.1, 2);
    EXPECT_THROW(fbp::curvature_expansion(c, 0.0, 0), fbp::DomainError);
    EXPECT_THROW(fbp::curvature_expansion(c, 0.0, 4), fbp::DomainError);
    const PolarCurve bad = PolarCurve::mode(1.0, 1.5, 2);
    EXPECT_THROW(fbp::curvature_exact(bad, 0.3), fbp::DegenerateDomainError);
}

TEST(Curvature, ThirdOrderRichardson) {
    const PolarCurve a = PolarCurve(2.0, 1e-2, {0.0, 0.0, 1.0, 0.3});
    const PolarCurve b = PolarCurve(2.0, 5e-3, {0.0, 0.0, 1.0, 0.3});
    double ea = 0.0, eb = 0.0;
    for (int j = 0; j < 128; ++j) {
        const double t = 2 * kPi * j / 128;
        ea = std::max(ea, std::abs(fbp::curvature_exact(a, t) - fbp::curvature_expansion(a, t, 3)));
        eb = std::max(eb, std::abs(fbp::curvature_exact(b, t) - fbp::curvature_expansion(b, t, 3)));
    }
    EXPECT_NEAR(ea / eb, 16.0, 1.0);
}

TEST(CurvatureProperty, ExpansionOrders) {
    fbp::testing::Sampler gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        // Shapes normalised so that |S''| <= 1.
        std::vector<double> cs(6), ss(6);
        double weight = 0.0;
        for (std::size_t k = 2; k < 6; ++k) {
            cs[k] = gen.uniform(-1.0, 1.0);
            ss[k] = gen.uniform(-1.0, 1.0);
            weight += double(k * k) * (std::abs(cs[k]) + std::abs(ss[k]));
        }
        for (std::size_t k = 2; k < 6; ++k) {
            cs[k] /= weight;
            ss[k] /= weight;
        }
        const double R = gen.uniform(0.5, 4.0);
        for (int order = 1; order <= 3; ++order) {
            std::vector<double> eps, err;
            for (double e = 0.1 * R; e > 0.99e-3 * R; e /= 2.0) {
                const PolarCurve c(R, e, cs, ss);
                double worst = 0.0;
                for (int j = 0; j < 96; ++j) {
                    const double t = 2 * kPi * j / 96;
                    worst = std::max(worst, std::abs(fbp::curvature_exact(c, t) - fbp::curvature_expansion(c, t, order)));
                }
                eps.push_back(e);
                err.push_back(worst);
            }
            EXPECT_NEAR(fbp::testing::loglog_slope(eps, err), order + 1.0, 0.2) << "trial " << trial << " order " << order;
        }
    }
}

TEST(CurvatureProperty, RotationEquivariance) {
    fbp::testing::Sampler gen(32);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> cs(5), ss(5);
        for (std::size_t k = 0; k < 5; ++k) {
            cs[k] = gen.uniform(-0.2, 0.2);
            ss[k] = gen.uniform(-0.2, 0.2);
        }
        const PolarCurve c(1.0, 1.0, cs, ss);
        const double phi = gen.uniform(0.0, 2 * kPi);
        const PolarCurve r = c.rotated(phi);
        for (int j = 0; j < 8; ++j) {
            const double t = gen.uniform(0.0, 2 * kPi);
            EXPECT_NEAR(fbp::curvature_exact(r, t + phi), fbp::curvature_exact(c, t), 1e-12);
        }
    }
}

TEST(CurvatureProperty, TotalTurning) {
    fbp::testing::Sampler gen(33);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> cs(5);
        for (std::size_t k = 2; k < 5; ++k) cs[k] = gen.uniform(-0.15, 0.15);
        const PolarCurve c(1.0, 1.0, cs);
        const int nodes = 512;
        double total = 0.0;
        for (int j = 0; j < nodes; ++j) {
            const double t = 2 * kPi * j / nodes;
            const fbp::PolarSample p = c.sample(t);
            total += fbp::curvature_exact(c, t) * std::hypot(p.rho, p.rho_t) * 2 * kPi / nodes;
        }
        EXPECT_NEAR(total, 2 * kPi, 1e-8);
    }
}

TEST(PolarCurve, EvennessAndDerivatives) {
    const PolarCurve even(1.0, 0.1, {0.0, 0.0, 1.0});
    EXPECT_TRUE(even.is_even());
    EXPECT_FALSE(even.rotated(0.3).is_even());
    const fbp::ShapeSample s = PolarCurve(1.0, 1.0, {0.0, 0.0, 0.0, 2.0}, {0.0, 1.0}).shape(0.4);
    EXPECT_NEAR(s.s, 2.0 * std::cos(1.2) + std::sin(0.4), 1e-15);
    EXPECT_NEAR(s.s_t, -6.0 * std::sin(1.2) + std::cos(0.4), 1e-14);
    EXPECT_NEAR(s.s_tt, -18.0 * std::cos(1.2) - std::sin(0.4), 1e-14);
}

}  // namespace
