#pragma once

namespace fbp {

/// Radially symmetric stationary state on the disk of radius R.
///
/// Fixed by the relation sigma_tilde / 2 = I_1(R) / (R I_0(R)). The pressure
/// is kept split as p = p_tilde + mu p_star, so the state itself is mu-free.
class StationaryState {
public:
    static StationaryState from_radius(double radius);
    static StationaryState from_sigma_tilde(double sigma_tilde);

    [[nodiscard]] double radius() const { return radius_; }
    [[nodiscard]] double sigma_tilde() const { return sigma_tilde_; }
    /// I_1(R) / I_0(R).
    [[nodiscard]] double bessel_ratio() const { return ratio_; }
    /// I_1(R) / (R I_0(R)) = sigma_tilde / 2.
    [[nodiscard]] double q() const { return ratio_ / radius_; }

private:
    StationaryState(double radius, double sigma_tilde, double ratio)
        : radius_(radius), sigma_tilde_(sigma_tilde), ratio_(ratio) {}

    double radius_;
    double sigma_tilde_;
    double ratio_;
};

/// Unique R with sigma_tilde / 2 = I_1(R) / (R I_0(R)). Bisection to a
/// bracket of width 1e-3, then Newton. Throws DomainError unless 0 < sigma_tilde < 1.
double solve_radius(double sigma_tilde);

/// 2 I_1(R) / (R I_0(R)). Throws DomainError for R <= 0.
double sigma_tilde_of_radius(double radius);

struct RadialFields {
    double sigma = 0.0;
    double p_tilde = 0.0;
    double p_star = 0.0;
    // radial derivatives
    double sigma_r = 0.0;
    double sigma_rr = 0.0;
    double p_star_r = 0.0;
    double p_star_rr = 0.0;
};

/// sigma_S, p_tilde_S, p_star_S and their radial derivatives at 0 <= r <= R.
/// p_star_S(R) = 0 and sigma_S(R) = 1 hold exactly.
RadialFields eval_radial_fields(const StationaryState& state, double r);

/// p_S = p_tilde_S + mu p_star_S at radius r.
double assemble_pressure(const StationaryState& state, double mu, double r);

/// Radial derivatives of the stationary fields at r = R.
struct StationaryBoundaryDerivatives {
    double sigma_r = 0.0;
    double sigma_rr = 0.0;
    double p_tilde_r = 0.0;
    double p_tilde_rr = 0.0;
    double p_tilde_rrr = 0.0;
    double p_star_r = 0.0;
    double p_star_rr = 0.0;
    double p_star_rrr = 0.0;
};

StationaryBoundaryDerivatives boundary_derivatives(const StationaryState& state);

}  // namespace fbp
