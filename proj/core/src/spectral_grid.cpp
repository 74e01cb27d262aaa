#include "fbp/spectral_grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fbp/errors.hpp"

namespace fbp {

ChebyshevMatrices chebyshev(int m) {
    if (m < 1) {
        throw DomainError("chebyshev: need at least two points");
    }
    ChebyshevMatrices out;
    out.x.resize(m + 1);
    for (int j = 0; j <= m; ++j) {
        out.x(j) = std::cos(std::numbers::pi * j / m);
    }
    // Symmetrize so that x_{m-j} = -x_j holds bit for bit.
    for (int j = 0; j <= m / 2; ++j) {
        const double v = 0.5 * (out.x(j) - out.x(m - j));
        out.x(j) = v;
        out.x(m - j) = -v;
    }
    if (m % 2 == 0) {
        out.x(m / 2) = 0.0;
    }
    Eigen::VectorXd c(m + 1);
    for (int j = 0; j <= m; ++j) {
        c(j) = ((j == 0 || j == m) ? 2.0 : 1.0) * (j % 2 == 0 ? 1.0 : -1.0);
    }
    out.d1 = Eigen::MatrixXd::Zero(m + 1, m + 1);
    for (int i = 0; i <= m; ++i) {
        double row = 0.0;
        for (int j = 0; j <= m; ++j) {
            if (i == j) continue;
            out.d1(i, j) = c(i) / c(j) / (out.x(i) - out.x(j));
            row += out.d1(i, j);
        }
        out.d1(i, i) = -row;
    }
    out.d2 = out.d1 * out.d1;
    return out;
}

FourierMatrices fourier(int n) {
    if (n < 2 || n % 2 != 0) {
        throw DomainError("fourier: node count must be even and >= 2");
    }
    const double h = 2.0 * std::numbers::pi / n;
    FourierMatrices out;
    out.d1 = Eigen::MatrixXd::Zero(n, n);
    out.d2 = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                out.d2(i, j) = -std::numbers::pi * std::numbers::pi / (3.0 * h * h) - 1.0 / 6.0;
                continue;
            }
            const int k = i - j;
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            const double half = 0.5 * k * h;
            out.d1(i, j) = 0.5 * sign / std::tan(half);
            out.d2(i, j) = -0.5 * sign / (std::sin(half) * std::sin(half));
        }
    }
    return out;
}

SolverGrid::SolverGrid(int n_r, int n_theta) : n_r_(n_r), n_theta_(n_theta) {
    if (n_r < 8) {
        throw DomainError("SolverGrid: N_R must be >= 8, got " + std::to_string(n_r));
    }
    if (n_theta < 16 || n_theta % 2 != 0) {
        throw DomainError("SolverGrid: N_theta must be even and >= 16, got " + std::to_string(n_theta));
    }
    theta_.resize(static_cast<std::size_t>(n_theta));
    for (int j = 0; j < n_theta; ++j) {
        theta_[static_cast<std::size_t>(j)] = 2.0 * std::numbers::pi * j / n_theta;
    }
    cheb_ = chebyshev(m());
    four_ = fourier(n_theta);
}

Eigen::MatrixXd SolverGrid::fold(const Eigen::MatrixXd& d, const Eigen::MatrixXd& u) const {
    const int mm = m();
    Eigen::MatrixXd shifted(n_r_, n_theta_);
    for (int j = 0; j < n_theta_; ++j) {
        shifted.col(j) = u.col(opposite(j));
    }
    const Eigen::MatrixXd near = d.topLeftCorner(n_r_, n_r_);
    Eigen::MatrixXd far(n_r_, n_r_);
    for (int l = 0; l < n_r_; ++l) {
        far.col(l) = d.col(mm - l).head(n_r_);
    }
    return near * u + far * shifted;
}

Eigen::MatrixXd SolverGrid::ds(const Eigen::MatrixXd& u) const { return fold(cheb_.d1, u); }

Eigen::MatrixXd SolverGrid::dss(const Eigen::MatrixXd& u) const { return fold(cheb_.d2, u); }

Eigen::MatrixXd SolverGrid::dt(const Eigen::MatrixXd& u) const { return u * four_.d1.transpose(); }

Eigen::MatrixXd SolverGrid::dtt(const Eigen::MatrixXd& u) const { return u * four_.d2.transpose(); }

}  // namespace fbp
