#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fbp/bifurcation.hpp"
#include "fbp/errors.hpp"
#include "fbp/fbp_solver.hpp"
#include "fbp/mode_perturbation.hpp"
#include "polar_oracle.hpp"

namespace {

using fbp::BoundaryShape;
using fbp::SolverGrid;
using fbp::StationaryState;

constexpr double kPi = std::numbers::pi;

TEST(SpectralGrid, ChebyshevExactOnPolynomials) {
    const fbp::ChebyshevMatrices c = fbp::chebyshev(12);
    Eigen::VectorXd f(13), df(13), d2f(13);
    for (int i = 0; i <= 12; ++i) {
        const double x = c.x(i);
        f(i) = std::pow(x, 9) - 2 * x * x + 0.5;
        df(i) = 9 * std::pow(x, 8) - 4 * x;
        d2f(i) = 72 * std::pow(x, 7) - 4;
    }
    EXPECT_LE((c.d1 * f - df).lpNorm<Eigen::Infinity>(), 1e-11);
    EXPECT_LE((c.d2 * f - d2f).lpNorm<Eigen::Infinity>(), 1e-9);
    EXPECT_NEAR(c.x(0), 1.0, 0.0);
    EXPECT_NEAR(c.x(12), -1.0, 0.0);
    EXPECT_NEAR(c.x(6), 0.0, 0.0);
}

TEST(SpectralGrid, FourierExactOnTrigPolynomials) {
    const int n = 24;
    const fbp::FourierMatrices fm = fbp::fourier(n);
    Eigen::VectorXd f(n), df(n), d2f(n);
    for (int j = 0; j < n; ++j) {
        const double t = 2 * kPi * j / n;
        f(j) = std::cos(3 * t) + 0.4 * std::sin(7 * t) + 1.0;
        df(j) = -3 * std::sin(3 * t) + 2.8 * std::cos(7 * t);
        d2f(j) = -9 * std::cos(3 * t) - 19.6 * std::sin(7 * t);
    }
    EXPECT_LE((fm.d1 * f - df).lpNorm<Eigen::Infinity>(), 1e-12);
    EXPECT_LE((fm.d2 * f - d2f).lpNorm<Eigen::Infinity>(), 1e-11);
}

// Derivatives across the pole: u(s, theta) = g(s cos theta, s sin theta).
TEST(SpectralGrid, FoldedRadialDerivatives) {
    const SolverGrid g(12, 32);
    Eigen::MatrixXd u(12, 32), us(12, 32), uss(12, 32), ut(12, 32);
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 32; ++j) {
            const double s = g.s(i);
            const double t = g.theta(j);
            const double x = s * std::cos(t);
            const double y = s * std::sin(t);
            u(i, j) = std::exp(x) * std::cos(y) + y * y * x;
            const double gx = std::exp(x) * std::cos(y) + y * y;
            const double gy = -std::exp(x) * std::sin(y) + 2 * x * y;
            const double gxx = std::exp(x) * std::cos(y);
            const double gxy = -std::exp(x) * std::sin(y) + 2 * y;
            const double gyy = -std::exp(x) * std::cos(y) + 2 * x;
            const double c = std::cos(t), sn = std::sin(t);
            us(i, j) = gx * c + gy * sn;
            uss(i, j) = gxx * c * c + 2 * gxy * c * sn + gyy * sn * sn;
            ut(i, j) = -gx * y + gy * x;
        }
    }
    EXPECT_LE((g.ds(u) - us).lpNorm<Eigen::Infinity>(), 1e-10);
    EXPECT_LE((g.dss(u) - uss).lpNorm<Eigen::Infinity>(), 1e-8);
    EXPECT_LE((g.dt(u) - ut).lpNorm<Eigen::Infinity>(), 1e-10);
    EXPECT_THROW(SolverGrid(6, 32), fbp::DomainError);
    EXPECT_THROW(SolverGrid(12, 15), fbp::DomainError);
}

BoundaryShape irregular_shape() {
    BoundaryShape b;
    b.cos = {0.03, 0.05, 0.08, -0.04};
    b.sin = {0.0, -0.06, 0.02, 0.0, 0.01};
    return b;
}

double manufactured(double x, double y) { return std::exp(0.3 * x) * std::cos(0.5 * y) + x * x * x - 3 * x * y * y + y * y; }
double manufactured_laplacian(double x, double y) { return (0.09 - 0.25) * std::exp(0.3 * x) * std::cos(0.5 * y) + 2.0; }

double manufactured_error(int n_r, int n_theta, double shift) {
    const SolverGrid g(n_r, n_theta);
    const fbp::MappedDisk disk(g, 2.0, irregular_shape());
    const fbp::EllipticOperator op(g, disk, shift);
    Eigen::MatrixXd exact(n_r, n_theta), source(n_r, n_theta);
    Eigen::VectorXd boundary(n_theta);
    for (int i = 0; i < n_r; ++i) {
        for (int j = 0; j < n_theta; ++j) {
            const double x = disk.r(i, j) * std::cos(g.theta(j));
            const double y = disk.r(i, j) * std::sin(g.theta(j));
            exact(i, j) = manufactured(x, y);
            source(i, j) = -manufactured_laplacian(x, y) + shift * exact(i, j);
        }
    }
    boundary = exact.row(0).transpose();
    const Eigen::MatrixXd u = op.solve(boundary, source);
    return (u - exact).lpNorm<Eigen::Infinity>() / exact.lpNorm<Eigen::Infinity>();
}

TEST(EllipticOperator, ManufacturedSolutionOnIrregularDomain) {
    EXPECT_LE(manufactured_error(20, 32, 0.0), 1e-8);
    EXPECT_LE(manufactured_error(20, 32, 1.0), 1e-8);
}

TEST(EllipticOperator, SpectralRefinement) {
    const double coarse = manufactured_error(8, 16, 1.0);
    const double fine = manufactured_error(14, 24, 1.0);
    EXPECT_GE(coarse / fine, 10.0) << coarse << " " << fine;
}

TEST(FbpSolver, RadialStateIsExact) {
    const StationaryState base = StationaryState::from_radius(2.0);
    const fbp::FbpSolver solver(SolverGrid(20, 32), base);
    const fbp::FieldSolution f = solver.solve_fields(BoundaryShape::zero());
    double worst = 0.0;
    for (int i = 0; i < f.r.rows(); ++i) {
        for (int j = 0; j < f.r.cols(); ++j) {
            const fbp::RadialFields e = fbp::eval_radial_fields(base, f.r(i, j));
            worst = std::max({worst, std::abs(f.sigma(i, j) - e.sigma), std::abs(f.p_tilde(i, j) - e.p_tilde),
                              std::abs(f.p_star(i, j) - e.p_star)});
        }
    }
    EXPECT_LE(worst, 1e-8);
    EXPECT_LE(f.linear_residual, 1e-11);
    const fbp::FCoefficients F = solver.evaluate_F(8.6, BoundaryShape::zero());
    EXPECT_LE(F.cos.lpNorm<Eigen::Infinity>(), 1e-10);
    EXPECT_LE(F.sin.lpNorm<Eigen::Infinity>(), 1e-10);
}

// d/d eps of sigma at a fixed computational node: sigma_S'(r) r_eps + sigma_1(r).
TEST(FbpSolver, FieldsFollowFirstOrderProfiles) {
    const StationaryState base = StationaryState::from_radius(2.0);
    const SolverGrid grid(20, 32);
    const fbp::FbpSolver solver(grid, base);
    const double h = 1e-5;
    for (int n : {2, 3, 4}) {
        const fbp::FieldSolution plus = solver.solve_fields(BoundaryShape::mode(n, h));
        const fbp::FieldSolution minus = solver.solve_fields(BoundaryShape::mode(n, -h));
        const fbp::FieldSolution zero = solver.solve_fields(BoundaryShape::zero());
        double worst = 0.0;
        for (int i = 0; i < zero.r.rows(); ++i) {
            for (int j = 0; j < zero.r.cols(); ++j) {
                const double r = zero.r(i, j);
                const double r_eps = (plus.r(i, j) - minus.r(i, j)) / (2 * h);
                const double c = std::cos(n * grid.theta(j));
                const fbp::RadialFields s = fbp::eval_radial_fields(base, r);
                const fbp::FirstOrderProfiles p = fbp::first_order_profiles(base, n, r);
                const double d_sigma = (plus.sigma(i, j) - minus.sigma(i, j)) / (2 * h);
                const double d_pstar = (plus.p_star(i, j) - minus.p_star(i, j)) / (2 * h);
                worst = std::max(worst, std::abs(d_sigma - (s.sigma_r * r_eps + p.sigma * c)));
                worst = std::max(worst, std::abs(d_pstar - (s.p_star_r * r_eps + p.p_star * c)));
            }
        }
        EXPECT_LE(worst, 1e-6) << n;
    }
}

TEST(FbpSolver, LinearizationMatchesClosedForm) {
    const StationaryState base = StationaryState::from_radius(2.0);
    const fbp::FbpSolver solver(SolverGrid(20, 32), base);
    const double h = 1e-4;
    for (int n : {2, 3, 4}) {
        const double mu = 0.7 * fbp::mu_n(base, n);
        const fbp::FCoefficients p = solver.evaluate_F(mu, BoundaryShape::mode(n, h));
        const fbp::FCoefficients m = solver.evaluate_F(mu, BoundaryShape::mode(n, -h));
        const double fd = (p.cos(n) - m.cos(n)) / (2 * h);
        const double exact = fbp::frechet_first_coefficient(base, mu, n);
        EXPECT_LE(std::abs(fd - exact) / std::abs(exact), 1e-6) << n;
    }
}

TEST(FbpSolver, SecondDifferenceMatchesLambda) {
    const StationaryState base = StationaryState::from_radius(2.0);
    const fbp::FbpSolver solver(SolverGrid(20, 32), base);
    const double h = 1e-3;
    for (int n : {2, 3}) {
        const double mu = fbp::mu_n(base, n);
        const fbp::FCoefficients p = solver.evaluate_F(mu, BoundaryShape::mode(n, h));
        const fbp::FCoefficients m = solver.evaluate_F(mu, BoundaryShape::mode(n, -h));
        const fbp::LambdaPair l = fbp::frechet_second(base, n);
        EXPECT_LE(std::abs((p.cos(0) + m.cos(0)) / (h * h) - l.lambda1) / std::abs(l.lambda1), 1e-4) << n;
        EXPECT_LE(std::abs((p.cos(2 * n) + m.cos(2 * n)) / (h * h) - l.lambda2) / std::abs(l.lambda2), 1e-4) << n;
    }
}

BoundaryShape rotate(const BoundaryShape& b, double alpha) {
    BoundaryShape out;
    const int top = b.highest_mode();
    out.cos.assign(static_cast<std::size_t>(top) + 1, 0.0);
    out.sin.assign(static_cast<std::size_t>(top) + 1, 0.0);
    for (int k = 0; k <= top; ++k) {
        const double c = b.cos_coeff(k);
        const double s = b.sin_coeff(k);
        out.cos[static_cast<std::size_t>(k)] = c * std::cos(k * alpha) - s * std::sin(k * alpha);
        out.sin[static_cast<std::size_t>(k)] = c * std::sin(k * alpha) + s * std::cos(k * alpha);
    }
    return out;
}

TEST(FbpSolverProperty, RotationEquivariance) {
    const StationaryState base = StationaryState::from_radius(2.0);
    const SolverGrid grid(16, 32);
    const fbp::FbpSolver solver(grid, base);
    fbp::testing::Sampler gen(5);
    for (int trial = 0; trial < 4; ++trial) {
        BoundaryShape b;
        b.cos = {0.0, gen.uniform(-0.05, 0.05), gen.uniform(-0.1, 0.1), gen.uniform(-0.05, 0.05)};
        b.sin = {0.0, gen.uniform(-0.05, 0.05), gen.uniform(-0.1, 0.1), gen.uniform(-0.05, 0.05)};
        const int shift = gen.integer(1, 31);
        const double mu = gen.uniform(1.0, 20.0);
        const Eigen::VectorXd f0 = solver.evaluate_F_nodal(mu, b);
        const Eigen::VectorXd f1 = solver.evaluate_F_nodal(mu, rotate(b, grid.theta(shift)));
        double worst = 0.0;
        for (int j = 0; j < 32; ++j) {
            worst = std::max(worst, std::abs(f1((j + shift) % 32) - f0(j)));
        }
        EXPECT_LE(worst, 1e-10 * std::max(1.0, f0.lpNorm<Eigen::Infinity>())) << trial;
    }
}

// The even-reduced system must agree with the full one.
TEST(FbpSolverProperty, EvenReductionMatchesFullSystem) {
    const StationaryState base = StationaryState::from_radius(2.0);
    const SolverGrid grid(16, 32);
    const fbp::FbpSolver solver(grid, base);
    BoundaryShape even = BoundaryShape::mode(2, 0.1);
    BoundaryShape nearly = even;
    nearly.sin = {0.0, 0.0, 1e-13};
    const fbp::MappedDisk d_even(grid, 2.0, even);
    const fbp::MappedDisk d_full(grid, 2.0, nearly);
    EXPECT_TRUE(fbp::EllipticOperator(grid, d_even, 0.0).reduced());
    EXPECT_FALSE(fbp::EllipticOperator(grid, d_full, 0.0).reduced());
    const fbp::FCoefficients a = solver.evaluate_F(5.0, even);
    const fbp::FCoefficients b = solver.evaluate_F(5.0, nearly);
    EXPECT_LE((a.cos - b.cos).lpNorm<Eigen::Infinity>(), 1e-10);
}

TEST(FbpSolver, Errors) {
    const StationaryState base = StationaryState::from_radius(2.0);
    const fbp::FbpSolver solver(SolverGrid(12, 16), base);
    EXPECT_THROW(solver.solve_fields(BoundaryShape::mode(2, 2.5)), fbp::DegenerateDomainError);
    EXPECT_THROW(solver.solve_fields(BoundaryShape::mode(9, 0.1)), fbp::DomainError);
    BoundaryShape bad;
    bad.cos = {0.0, std::nan("")};
    EXPECT_THROW(solver.solve_fields(bad), fbp::DomainError);
}

}  // namespace
