#pragma once

#include "fbp/radial_stationary.hpp"

namespace fbp {

/// Radial profiles of the first-order fields for S = cos(n theta); each
/// field equals profile(r) * cos(n theta).
struct FirstOrderProfiles {
    double sigma = 0.0;
    double p_tilde = 0.0;
    double p_star = 0.0;
};

/// Throws DomainError for r outside [0, R] or n < 0.
FirstOrderProfiles first_order_profiles(const StationaryState& base, int n, double r);

/// Coefficients of the first-order boundary derivatives at r = R. Radial
/// entries multiply cos(n theta); the theta entries multiply sin(n theta).
struct FirstOrderBoundaryDerivatives {
    double sigma_r = 0.0;
    double p_tilde_r = 0.0;
    double p_star_r = 0.0;
    double p_tilde_rr = 0.0;
    double p_star_rr = 0.0;
    double p_tilde_theta = 0.0;
    double p_star_theta = 0.0;
};

FirstOrderBoundaryDerivatives first_order_boundary_derivatives(const StationaryState& base, int n);

/// M~_n = 1/2 + (2n - 3)/2 * q - M_n, with q = I_1/(R I_0).
double m_tilde(const StationaryState& base, int n);

/// The same quantity written as (2n + 1)/2 * q - 1/2 + I_1 I_{n+1} / (I_0 I_n).
double m_tilde_intermediate(const StationaryState& base, int n);

/// The same quantity read off the sigma_2 boundary data:
/// -sigma_S''(R)/2 - d sigma_1/dr (R).
double m_tilde_from_boundary(const StationaryState& base, int n);

struct SecondOrderFields {
    double sigma = 0.0;
    double p_tilde = 0.0;
    double p_star = 0.0;
};

/// Mode-0 and mode-2n (cos(2n theta)) coefficients of a radial derivative at r = R.
struct ModePair {
    double mode0 = 0.0;
    double mode2n = 0.0;
};

struct SecondOrderBoundaryDerivatives {
    ModePair sigma_r;
    ModePair p_tilde_r;
    ModePair p_star_r;
};

/// First- and second-order perturbation fields for the boundary
/// r = R + eps cos(n theta) + O(eps^2), n >= 2.
class ModeExpansion {
public:
    ModeExpansion(const StationaryState& base, int n);
    /// Uses the supplied M~_n instead of the closed form.
    ModeExpansion(const StationaryState& base, int n, double m_tilde_value);

    [[nodiscard]] const StationaryState& base() const { return base_; }
    [[nodiscard]] int mode() const { return n_; }
    [[nodiscard]] double m_tilde() const { return m_tilde_; }

    [[nodiscard]] FirstOrderProfiles first_order(double r) const;
    [[nodiscard]] FirstOrderBoundaryDerivatives first_order_boundary() const;

    /// Radial profiles of the second-order fields: value = mode0(r) + mode2n(r) cos(2n theta).
    [[nodiscard]] ModePair sigma2_profile(double r) const;
    [[nodiscard]] ModePair p_tilde2_profile(double r) const;
    [[nodiscard]] ModePair p_star2_profile(double r) const;

    [[nodiscard]] SecondOrderFields second_order_fields(double r, double theta) const;
    [[nodiscard]] SecondOrderBoundaryDerivatives second_order_boundary_derivatives() const;

private:
    void check_radius(double r) const;

    StationaryState base_;
    int n_;
    double m_tilde_;
    double ratio_2n_;  // I_{2n+1}(R) / I_{2n}(R)
};

SecondOrderFields second_order_fields(const ModeExpansion& exp, double r, double theta);
SecondOrderBoundaryDerivatives second_order_boundary_derivatives(const ModeExpansion& exp);

/// Constant and cos(2n theta) coefficients of the p_tilde_2 closed form.
ModePair p_tilde2_coefficients(int n);

}  // namespace fbp
