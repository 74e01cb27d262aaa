#pragma once

#include <Eigen/Dense>
#include <vector>

namespace fbp {

/// Chebyshev points x_j = cos(j pi / M), j = 0..M, and the collocation
/// first/second derivative matrices on them.
struct ChebyshevMatrices {
    Eigen::VectorXd x;
    Eigen::MatrixXd d1;
    Eigen::MatrixXd d2;
};

ChebyshevMatrices chebyshev(int m);

/// Periodic first/second derivative matrices on n equispaced points of
/// [0, 2 pi), n even.
struct FourierMatrices {
    Eigen::MatrixXd d1;
    Eigen::MatrixXd d2;
};

FourierMatrices fourier(int n);

/// Collocation grid on the unit disk in (s, theta).
///
/// Radial nodes are the N_R positive points of a Chebyshev grid on [-1, 1]
/// with M = 2 N_R - 1, so s = 0 is never a node and s_0 = 1 is the boundary.
/// Values at the mirrored node -s are read as U(s, theta + pi).
class SolverGrid {
public:
    SolverGrid(int n_r, int n_theta);

    [[nodiscard]] int n_r() const { return n_r_; }
    [[nodiscard]] int n_theta() const { return n_theta_; }
    /// Index of the last Chebyshev point, M = 2 N_R - 1.
    [[nodiscard]] int m() const { return 2 * n_r_ - 1; }
    [[nodiscard]] double s(int i) const { return cheb_.x(i); }
    [[nodiscard]] double theta(int j) const { return theta_[static_cast<std::size_t>(j)]; }
    [[nodiscard]] const std::vector<double>& thetas() const { return theta_; }
    [[nodiscard]] const ChebyshevMatrices& cheb() const { return cheb_; }
    [[nodiscard]] const FourierMatrices& four() const { return four_; }
    /// Angular node index shifted by pi.
    [[nodiscard]] int opposite(int j) const { return (j + n_theta_ / 2) % n_theta_; }

    /// d/ds and d^2/ds^2 of a field stored on the positive nodes
    /// (rows = radial index, cols = angular index), using the parity fold.
    [[nodiscard]] Eigen::MatrixXd ds(const Eigen::MatrixXd& u) const;
    [[nodiscard]] Eigen::MatrixXd dss(const Eigen::MatrixXd& u) const;
    /// d/dtheta and d^2/dtheta^2 row by row.
    [[nodiscard]] Eigen::MatrixXd dt(const Eigen::MatrixXd& u) const;
    [[nodiscard]] Eigen::MatrixXd dtt(const Eigen::MatrixXd& u) const;

private:
    [[nodiscard]] Eigen::MatrixXd fold(const Eigen::MatrixXd& d, const Eigen::MatrixXd& u) const;

    int n_r_;
    int n_theta_;
    std::vector<double> theta_;
    ChebyshevMatrices cheb_;
    FourierMatrices four_;
};

}  // namespace fbp
