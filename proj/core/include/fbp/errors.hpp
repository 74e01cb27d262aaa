#pragma once

#include <stdexcept>
#include <string>

namespace fbp {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An iterative method (root finder, Newton) failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Boundary curve r = rho(theta) is not a valid star-shaped domain.
class DegenerateDomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense factorization was singular or the solve residual was too large.
class LinearSolveError : public std::runtime_error {
public:
    LinearSolveError(const std::string& what, double condition_estimate)
        : std::runtime_error(what + " (condition estimate " + std::to_string(condition_estimate) + ")"),
          condition_estimate_(condition_estimate) {}

    [[nodiscard]] double condition_estimate() const noexcept { return condition_estimate_; }

private:
    double condition_estimate_;
};

/// Newton Jacobian is singular, e.g. when started exactly at a bifurcation point.
class SingularJacobianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Pseudo-arclength step fell below the minimum allowed length.
class StepCollapseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fbp
