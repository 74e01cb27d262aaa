#include "fbp/boundary_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fbp/errors.hpp"

namespace fbp {

PolarCurve::PolarCurve(double base_radius, double epsilon, std::vector<double> cos_coeffs,
                       std::vector<double> sin_coeffs)
    : base_radius_(base_radius), epsilon_(epsilon), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)) {
    if (!(base_radius > 0.0) || !std::isfinite(base_radius) || !std::isfinite(epsilon)) {
        throw DomainError("PolarCurve: base radius must be positive and finite");
    }
    const std::size_t modes = std::max(cos_.size(), sin_.size());
    cos_.resize(modes, 0.0);
    sin_.resize(modes, 0.0);
    for (std::size_t k = 0; k < modes; ++k) {
        if (!std::isfinite(cos_[k]) || !std::isfinite(sin_[k])) {
            throw DomainError("PolarCurve: non-finite Fourier coefficient at mode " + std::to_string(k));
        }
    }
    const int samples = 64 * static_cast<int>(modes + 1);
    min_radius_ = base_radius_;
    for (int j = 0; j < samples; ++j) {
        min_radius_ = std::min(min_radius_, sample(2.0 * std::numbers::pi * j / samples).rho);
    }
}

PolarCurve PolarCurve::mode(double base_radius, double epsilon, int n) {
    if (n < 0) {
        throw DomainError("PolarCurve::mode: n must be >= 0");
    }
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[static_cast<std::size_t>(n)] = 1.0;
    return {base_radius, epsilon, std::move(c)};
}

bool PolarCurve::is_even() const {
    return std::all_of(sin_.begin(), sin_.end(), [](double v) { return v == 0.0; });
}

ShapeSample PolarCurve::shape(double theta) const {
    ShapeSample out;
    for (std::size_t k = 0; k < cos_.size(); ++k) {
        const double kk = static_cast<double>(k);
        const double c = std::cos(kk * theta);
        const double s = std::sin(kk * theta);
        out.s += cos_[k] * c + sin_[k] * s;
        out.s_t += kk * (-cos_[k] * s + sin_[k] * c);
        out.s_tt -= kk * kk * (cos_[k] * c + sin_[k] * s);
    }
    return out;
}

PolarSample PolarCurve::sample(double theta) const {
    const ShapeSample s = shape(theta);
    return {base_radius_ + epsilon_ * s.s, epsilon_ * s.s_t, epsilon_ * s.s_tt};
}

PolarCurve PolarCurve::rotated(double phi) const {
    std::vector<double> c(cos_.size());
    std::vector<double> s(sin_.size());
    for (std::size_t k = 0; k < cos_.size(); ++k) {
        const double kp = static_cast<double>(k) * phi;
        c[k] = cos_[k] * std::cos(kp) - sin_[k] * std::sin(kp);
        s[k] = cos_[k] * std::sin(kp) + sin_[k] * std::cos(kp);
    }
    return {base_radius_, epsilon_, std::move(c), std::move(s)};
}

double polar_curvature(double rho, double rho_t, double rho_tt) {
    const double g = rho * rho + rho_t * rho_t;
    return (rho * rho + 2.0 * rho_t * rho_t - rho * rho_tt) / (g * std::sqrt(g));
}

double curvature_exact(const PolarCurve& curve, double theta) {
    const PolarSample p = curve.sample(theta);
    if (!(curve.min_radius() > 0.0) || !(p.rho > 0.0)) {
        throw DegenerateDomainError("curvature_exact: rho <= 0 on the curve (min rho = " +
                                    std::to_string(std::min(curve.min_radius(), p.rho)) + ")");
    }
    return polar_curvature(p.rho, p.rho_t, p.rho_tt);
}

double curvature_expansion(const PolarCurve& curve, double theta, int order) {
    if (order < 1 || order > 3) {
        throw DomainError("curvature_expansion: order must be 1, 2 or 3, got " + std::to_string(order));
    }
    const double R = curve.base_radius();
    const double e = curve.epsilon();
    const ShapeSample sh = curve.shape(theta);
    const double s = sh.s;
    const double s1 = sh.s_t;
    const double s2 = sh.s_tt;
    double k = 1.0 / R - e * (s + s2) / (R * R);
    if (order >= 2) {
        k += e * e * (2.0 * s * s2 + s * s + 0.5 * s1 * s1) / (R * R * R);
    }
    if (order >= 3) {
        k -= e * e * e * (s * s * s + 1.5 * s * s1 * s1 + 3.0 * s * s * s2 - 1.5 * s1 * s1 * s2) / (R * R * R * R);
    }
    return k;
}

}  // namespace fbp
