#pragma once

#include <vector>

namespace fbp {

/// rho, d rho / d theta, d^2 rho / d theta^2 at one angle.
struct PolarSample {
    double rho = 0.0;
    double rho_t = 0.0;
    double rho_tt = 0.0;
};

/// Shape S with its first two angular derivatives at one angle.
struct ShapeSample {
    double s = 0.0;
    double s_t = 0.0;
    double s_tt = 0.0;
};

/// Star-shaped curve r = rho(theta) = R + eps * S(theta), with S a finite
/// Fourier series: S = sum_k cos_k cos(k theta) + sin_k sin(k theta).
class PolarCurve {
public:
    PolarCurve(double base_radius, double epsilon, std::vector<double> cos_coeffs,
               std::vector<double> sin_coeffs = {});

    /// S = cos(n theta).
    static PolarCurve mode(double base_radius, double epsilon, int n);

    [[nodiscard]] double base_radius() const { return base_radius_; }
    [[nodiscard]] double epsilon() const { return epsilon_; }
    [[nodiscard]] const std::vector<double>& cos_coeffs() const { return cos_; }
    [[nodiscard]] const std::vector<double>& sin_coeffs() const { return sin_; }
    [[nodiscard]] bool is_even() const;

    /// Angular derivatives are exact: mode k picks up +-k per derivative.
    [[nodiscard]] ShapeSample shape(double theta) const;
    [[nodiscard]] PolarSample sample(double theta) const;

    /// Minimum of rho over a fine angular sampling.
    [[nodiscard]] double min_radius() const { return min_radius_; }

    /// The curve with shape S(theta - phi).
    [[nodiscard]] PolarCurve rotated(double phi) const;

private:
    double base_radius_;
    double epsilon_;
    std::vector<double> cos_;
    std::vector<double> sin_;
    double min_radius_ = 0.0;
};

/// Curvature of a polar curve from rho and its angular derivatives.
double polar_curvature(double rho, double rho_t, double rho_tt);

/// (rho^2 + 2 rho_t^2 - rho rho_tt) / (rho^2 + rho_t^2)^(3/2).
/// Throws DegenerateDomainError when rho <= 0 somewhere on the curve.
double curvature_exact(const PolarCurve& curve, double theta);

/// Expansion of the curvature in eps truncated after order 1, 2 or 3:
///   1/R - eps (S + S'')/R^2 + eps^2 (2 S S'' + S^2 + S'^2/2)/R^3
///       - eps^3 (S^3 + 3/2 S S'^2 + 3 S^2 S'' - 3/2 S'^2 S'')/R^4
/// Throws DomainError for any other order.
double curvature_expansion(const PolarCurve& curve, double theta, int order);

}  // namespace fbp
