#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fbp/spectral_grid.hpp"

namespace fbp {

/// Boundary perturbation R~(theta) = sum_k cos_k cos(k theta) + sin_k sin(k theta).
struct BoundaryShape {
    std::vector<double> cos;
    std::vector<double> sin;

    static BoundaryShape zero() { return {}; }
    /// eps cos(n theta).
    static BoundaryShape mode(int n, double eps);

    [[nodiscard]] bool is_even() const;
    [[nodiscard]] double cos_coeff(int k) const;
    [[nodiscard]] double sin_coeff(int k) const;
    [[nodiscard]] int highest_mode() const;
};

/// Boundary-fitted coordinates on the star-shaped domain r < R + R~(theta).
///
/// r(s, phi) = s (R + sum_k s^k h_k(phi)), h_k the k-th Fourier term of R~.
/// At s = 1 this is the boundary, and r(-s, phi) = -r(s, phi + pi), so a field
/// smooth in the physical plane stays parity-consistent on the doubled grid.
/// The angle is not remapped.
class MappedDisk {
public:
    /// Throws DegenerateDomainError if the boundary radius or dr/ds is not
    /// positive at some node, and DomainError if the shape has modes above N_theta/2.
    MappedDisk(const SolverGrid& grid, double base_radius, BoundaryShape shape);

    [[nodiscard]] const BoundaryShape& shape() const { return shape_; }
    [[nodiscard]] double base_radius() const { return base_radius_; }
    [[nodiscard]] bool is_even() const { return shape_.is_even(); }

    // Mapping derivatives on the positive nodes (rows = radial, cols = angular).
    Eigen::MatrixXd r;
    Eigen::MatrixXd r_s;
    Eigen::MatrixXd r_ss;
    Eigen::MatrixXd r_p;
    Eigen::MatrixXd r_pp;
    Eigen::MatrixXd r_sp;

    // Boundary rho, d rho/d theta, d^2 rho/d theta^2 at the angular nodes.
    Eigen::VectorXd rho;
    Eigen::VectorXd rho_t;
    Eigen::VectorXd rho_tt;

private:
    double base_radius_;
    BoundaryShape shape_;
};

}  // namespace fbp
