#include "fbp/mode_perturbation.hpp"

#include <cmath>
#include <string>

#include "fbp/bessel.hpp"
#include "fbp/bifurcation.hpp"
#include "fbp/errors.hpp"

namespace fbp {

namespace {

void check_profile_args(const StationaryState& base, int n, double r) {
    if (n < 0) {
        throw DomainError("mode index must be >= 0, got " + std::to_string(n));
    }
    if (!(r >= 0.0 && r <= base.radius())) {
        throw DomainError("radius must lie in [0, R_S], got " + std::to_string(r));
    }
}

// I_n(r) / I_n(R), exactly 1 at r = R.
double bessel_profile(int n, double r, double R) {
    return r == R ? 1.0 : besseli_quotient(n, r, n, R);
}

double power_profile(int n, double r, double R) { return n == 0 ? 1.0 : std::pow(r / R, n); }

}  // namespace

FirstOrderProfiles first_order_profiles(const StationaryState& base, int n, double r) {
    check_profile_args(base, n, r);
    const double R = base.radius();
    const double a = base.bessel_ratio();
    const double bn = bessel_profile(n, r, R);
    const double pn = power_profile(n, r, R);
    FirstOrderProfiles f;
    f.sigma = -a * bn;
    f.p_tilde = (static_cast<double>(n) * n - 1.0) * pn / (R * R);
    f.p_star = -pn * a + a * bn;
    return f;
}

FirstOrderBoundaryDerivatives first_order_boundary_derivatives(const StationaryState& base, int n) {
    if (n < 0) {
        throw DomainError("first_order_boundary_derivatives: n must be >= 0");
    }
    const double R = base.radius();
    const double a = base.bessel_ratio();
    const double rn = besseli_ratio(n, R);
    const double nn = n;
    const double k = nn * (nn * nn - 1.0);
    FirstOrderBoundaryDerivatives d;
    d.sigma_r = -a * (rn + nn / R);
    d.p_tilde_r = k / (R * R * R);
    d.p_star_r = a * rn;
    d.p_tilde_rr = (nn - 1.0) * k / (R * R * R * R);
    d.p_star_rr = a - a * rn / R;
    d.p_tilde_theta = -k / (R * R);
    d.p_star_theta = 0.0;
    return d;
}

double m_tilde(const StationaryState& base, int n) {
    return 0.5 + (2.0 * n - 3.0) / 2.0 * base.q() - m_n(base, n);
}

double m_tilde_intermediate(const StationaryState& base, int n) {
    const double a = base.bessel_ratio();
    return (2.0 * n + 1.0) / 2.0 * base.q() - 0.5 + a * besseli_ratio(n, base.radius());
}

double m_tilde_from_boundary(const StationaryState& base, int n) {
    return -0.5 * boundary_derivatives(base).sigma_rr - first_order_boundary_derivatives(base, n).sigma_r;
}

ModePair p_tilde2_coefficients(int n) {
    const double nn = n;
    const double cubic = nn * (nn * nn - 1.0) / 2.0;
    return {0.5 - 0.75 * nn * nn - cubic, 0.5 - 1.25 * nn * nn - cubic};
}

ModeExpansion::ModeExpansion(const StationaryState& base, int n) : ModeExpansion(base, n, fbp::m_tilde(base, n)) {}

ModeExpansion::ModeExpansion(const StationaryState& base, int n, double m_tilde_value)
    : base_(base), n_(n), m_tilde_(m_tilde_value), ratio_2n_(0.0) {
    if (n < 2 || 2 * n > kMaxBesselOrder) {
        throw DomainError("ModeExpansion: n must lie in [2, " + std::to_string(kMaxBesselOrder / 2) + "], got " +
                          std::to_string(n));
    }
    ratio_2n_ = besseli_ratio(2 * n, base.radius());
}

void ModeExpansion::check_radius(double r) const { check_profile_args(base_, n_, r); }

FirstOrderProfiles ModeExpansion::first_order(double r) const { return first_order_profiles(base_, n_, r); }

FirstOrderBoundaryDerivatives ModeExpansion::first_order_boundary() const {
    return first_order_boundary_derivatives(base_, n_);
}

ModePair ModeExpansion::sigma2_profile(double r) const {
    check_radius(r);
    const double R = base_.radius();
    return {0.5 * m_tilde_ * bessel_profile(0, r, R), 0.5 * m_tilde_ * bessel_profile(2 * n_, r, R)};
}

ModePair ModeExpansion::p_tilde2_profile(double r) const {
    check_radius(r);
    const double R = base_.radius();
    const ModePair c = p_tilde2_coefficients(n_);
    const double R3 = R * R * R;
    return {c.mode0 / R3, power_profile(2 * n_, r, R) * c.mode2n / R3};
}

ModePair ModeExpansion::p_star2_profile(double r) const {
    const ModePair s = sigma2_profile(r);
    const double h = (2.0 * n_ - 1.0) / 4.0 * base_.q();
    return {h - s.mode0, h * power_profile(2 * n_, r, base_.radius()) - s.mode2n};
}

SecondOrderFields ModeExpansion::second_order_fields(double r, double theta) const {
    const double c = std::cos(2.0 * n_ * theta);
    const ModePair s = sigma2_profile(r);
    const ModePair pt = p_tilde2_profile(r);
    const ModePair ps = p_star2_profile(r);
    return {s.mode0 + s.mode2n * c, pt.mode0 + pt.mode2n * c, ps.mode0 + ps.mode2n * c};
}

SecondOrderBoundaryDerivatives ModeExpansion::second_order_boundary_derivatives() const {
    const double R = base_.radius();
    const double a = base_.bessel_ratio();
    const double nn = n_;
    SecondOrderBoundaryDerivatives d;
    d.sigma_r = {0.5 * m_tilde_ * a, 0.5 * m_tilde_ * (ratio_2n_ + 2.0 * nn / R)};
    d.p_tilde_r = {0.0, 2.0 * nn / (R * R * R * R) * p_tilde2_coefficients(n_).mode2n};
    d.p_star_r = {-d.sigma_r.mode0, nn * (2.0 * nn - 1.0) / 2.0 * a / (R * R) - d.sigma_r.mode2n};
    return d;
}

SecondOrderFields second_order_fields(const ModeExpansion& exp, double r, double theta) {
    return exp.second_order_fields(r, theta);
}

SecondOrderBoundaryDerivatives second_order_boundary_derivatives(const ModeExpansion& exp) {
    return exp.second_order_boundary_derivatives();
}

}  // namespace fbp
