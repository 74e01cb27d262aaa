#pragma once

#include <Eigen/Dense>
#include <vector>

#include "fbp/mapped_disk.hpp"
#include "fbp/radial_stationary.hpp"
#include "fbp/spectral_grid.hpp"

namespace fbp {

/// Dirichlet problem -Lap u + shift u = f on a mapped disk, collocated at the
/// interior nodes with the boundary row eliminated. With an even boundary the
/// system is reduced to the half-circle of angular nodes.
class EllipticOperator {
public:
    EllipticOperator(const SolverGrid& grid, const MappedDisk& disk, double shift);

    /// Full field (rows = radial index, row 0 on the boundary) with the given
    /// boundary values and interior source (same layout; row 0 ignored).
    /// Throws LinearSolveError when the relative residual
    /// |b - A x| / (|A| |x| + |b|) exceeds 1e-11; the value is stored in
    /// relative_residual when given.
    [[nodiscard]] Eigen::MatrixXd solve(const Eigen::VectorXd& boundary, const Eigen::MatrixXd& source,
                                        double* relative_residual = nullptr) const;

    /// (-Lap + shift) u at every node, evaluated from the collocation
    /// derivatives; row 0 is set to zero.
    [[nodiscard]] Eigen::MatrixXd apply(const Eigen::MatrixXd& u) const;

    /// Laplacian at every node (row 0 included).
    [[nodiscard]] Eigen::MatrixXd laplacian(const Eigen::MatrixXd& u) const;

    [[nodiscard]] bool reduced() const { return reduced_; }
    [[nodiscard]] double rcond() const { return rcond_; }
    [[nodiscard]] int unknowns() const { return static_cast<int>(lhs_.rows()); }

private:
    void assemble();
    [[nodiscard]] int column(int l, int m) const;
    [[nodiscard]] int angular_unknowns() const;

    const SolverGrid* grid_;
    const MappedDisk* disk_;
    double shift_;
    bool reduced_;
    Eigen::MatrixXd a_, b_, c_, e_;  // coefficients of U_ss, U_s, U_pp, U_sp
    Eigen::MatrixXd lhs_;
    Eigen::MatrixXd boundary_block_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double rcond_ = 0.0;
};

/// Fields of the stationary system on one domain.
struct FieldSolution {
    Eigen::MatrixXd sigma;
    Eigen::MatrixXd p_tilde;
    Eigen::MatrixXd p_star;
    Eigen::MatrixXd r;  // physical radius of every node
    BoundaryShape boundary;
    double linear_residual = 0.0;  // max relative residual of the three linear solves
};

/// Normal derivatives of p_tilde and p_star at the angular boundary nodes.
struct BoundaryFlux {
    Eigen::VectorXd p_tilde;
    Eigen::VectorXd p_star;
};

/// Fourier coefficients of F on the boundary nodes: cos modes 0..N/2 and
/// sin modes 0..N/2 (sin_0 and sin_{N/2} are always 0).
struct FCoefficients {
    Eigen::VectorXd cos;
    Eigen::VectorXd sin;
};

/// F = F~ + mu F*, both parts kept.
struct FSplit {
    FCoefficients tilde;
    FCoefficients star;

    [[nodiscard]] FCoefficients at(double mu) const;
};

/// A solved domain together with its mu.
struct DiscreteSolution {
    double mu = 0.0;
    BoundaryShape boundary;
    FieldSolution fields;
    double residual_norm = 0.0;
    int iterations = 0;
    bool trivial_branch = false;
    double pinned_mode_residual = 0.0;  // |F_1| at the solution, not imposed
};

FCoefficients project_boundary(const SolverGrid& grid, const Eigen::VectorXd& values);

/// Solver for the stationary system around one base state.
class FbpSolver {
public:
    FbpSolver(SolverGrid grid, StationaryState base);

    [[nodiscard]] const SolverGrid& grid() const { return grid_; }
    [[nodiscard]] const StationaryState& base() const { return base_; }

    /// sigma: -Lap + 1, sigma = 1 on the boundary.
    /// p_tilde: Lap = 0, p_tilde = curvature on the boundary.
    /// p_star: -Lap = sigma - sigma_tilde, p_star = 0 on the boundary.
    [[nodiscard]] FieldSolution solve_fields(const BoundaryShape& boundary) const;

    [[nodiscard]] BoundaryFlux normal_flux(const FieldSolution& fields) const;

    [[nodiscard]] FSplit evaluate_F_split(const BoundaryShape& boundary) const;
    [[nodiscard]] FCoefficients evaluate_F(double mu, const BoundaryShape& boundary) const;
    /// F at the angular boundary nodes.
    [[nodiscard]] Eigen::VectorXd evaluate_F_nodal(double mu, const BoundaryShape& boundary) const;

private:
    SolverGrid grid_;
    StationaryState base_;
};

FieldSolution solve_fields(const SolverGrid& grid, const StationaryState& base, const BoundaryShape& boundary);
FCoefficients evaluate_F(const SolverGrid& grid, const StationaryState& base, double mu, const BoundaryShape& boundary);

}  // namespace fbp
