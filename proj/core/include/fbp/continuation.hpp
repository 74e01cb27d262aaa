#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fbp/fbp_solver.hpp"

namespace fbp {

struct NewtonOptions {
    double tolerance = 1e-10;  // max-norm of the augmented residual
    int max_iterations = 30;
    double fd_step = 1e-7;  // forward-difference step, scaled by max(1, |coefficient|)
    bool allow_trivial = true;  // eps = 0 returns the radial solution instead of failing
};

/// Nonradial stationary solution with boundary R + eps cos(n theta) + ...
///
/// Unknowns: cos modes 0, 2, ..., N_theta/2 - 1 of the boundary and mu; mode 1
/// stays 0. Equations: the same cos modes of F and the amplitude constraint
/// (mode n coefficient) = eps. The Jacobian is built by forward differences;
/// its mu column is F* exactly since F is affine in mu.
/// At eps = 0 the radial solution is returned with trivial_branch set when
/// allowed; otherwise the singular Jacobian raises SingularJacobianError.
/// A run that does not converge returns the best iterate with converged = false.
struct NewtonResult {
    DiscreteSolution solution;
    bool converged = false;
};

NewtonResult newton_branch_point(const FbpSolver& solver, int n, double eps, double mu_guess,
                                 const NewtonOptions& options = {});

struct ContinuationOptions {
    double eps_start = 0.02;     // amplitude of the first Newton point on each side
    double initial_step = 0.02;  // first arclength step
    double max_step = 0.05;
    double min_step = 1e-8;
    int max_points = 60;  // per side
    int corrector_iterations = 8;
    bool throw_on_collapse = true;  // false: stop that side, log it and keep the points so far
    NewtonOptions newton;
};

struct BranchPoint {
    double mu = 0.0;
    double epsilon = 0.0;  // mode-n cosine coefficient of the boundary
    DiscreteSolution solution;
};

struct ContinuationBranch {
    int n = 0;
    std::vector<BranchPoint> points;  // ordered by increasing epsilon
    std::vector<double> arclength;    // cumulative, same length as points
    std::vector<double> steps;        // accepted arclength steps
    std::vector<std::string> log;     // step halvings and other events
    bool complete = true;             // false when a side stopped on step collapse
    double mu_guess = 0.0;
};

/// Pseudo-arclength continuation of the mode-n branch for both signs of eps
/// until |eps| reaches eps_max. The secant through the last two points is
/// the predictor direction; failed correctors halve the step, and a step
/// below min_step throws StepCollapseError.
ContinuationBranch continue_branch(const FbpSolver& solver, int n, double eps_max,
                                   const ContinuationOptions& options = {});

enum class ExpansionTerms { full, drop_second, drop_both };

enum class OrderStatus { ok, floor_warning, fail };

std::string to_string(OrderStatus s);

struct ExpansionOrderOptions {
    std::optional<double> mu;  // defaults to mu_n
    ExpansionTerms terms = ExpansionTerms::full;
    double slope_tolerance = 0.2;
};

struct ExpansionOrderResult {
    std::vector<double> eps;
    std::vector<double> remainder;
    std::vector<bool> used;  // false once the discretization floor is reached
    double slope = 0.0;
    double expected = 3.0;
    double decades = 0.0;  // span of the points used in the fit
    bool floor_reached = false;
    OrderStatus status = OrderStatus::ok;
};

/// Remainder r(eps) = max_theta |F(mu, eps cos n theta) - eps F_1 cos(n theta)
/// - eps^2/2 (Lambda_1 + Lambda_2 cos(2n theta))| on the boundary nodes and its
/// log-log slope. Points are taken from the largest eps down; the floor is
/// reached at the first pair whose local slope falls more than 0.5 below the
/// expected order. A floor reached before two decades gives floor_warning;
/// a slope outside expected +- slope_tolerance gives fail.
ExpansionOrderResult verify_expansion_order(const FbpSolver& solver, int n, std::vector<double> eps,
                                            const ExpansionOrderOptions& options = {});

struct MuSecondEstimate {
    double mu_second = 0.0;  // 2b
    double constant = 0.0;   // c
    double linear = 0.0;     // a
    double quadratic = 0.0;  // b
    double eps_max = 0.0;
    bool pitchfork_consistent = false;  // |a| <= 1e-3 |b| eps_max
    bool ill_conditioned = false;       // eps range below 10x the solver noise
};

/// Least-squares fit mu = c + a eps + b eps^2. Needs at least 7 points with
/// both signs of eps; throws DomainError otherwise.
MuSecondEstimate estimate_mu_second(const std::vector<double>& eps, const std::vector<double>& mu,
                                    double solver_noise = 0.0);
MuSecondEstimate estimate_mu_second(const ContinuationBranch& branch);

}  // namespace fbp
