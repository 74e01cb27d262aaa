#include "fbp/radial_stationary.hpp"

#include <cmath>
#include <string>

#include "fbp/bessel.hpp"
#include "fbp/errors.hpp"

namespace fbp {

namespace {

// I_1(R) / I_0(R), stable for all R > 0.
double ratio10(double radius) { return besseli_ratio(0, radius); }

double rhs(double radius) { return 2.0 * ratio10(radius) / radius; }

}  // namespace

StationaryState StationaryState::from_radius(double radius) {
    return {radius, sigma_tilde_of_radius(radius), ratio10(radius)};
}

StationaryState StationaryState::from_sigma_tilde(double sigma_tilde) {
    const double radius = solve_radius(sigma_tilde);
    return {radius, sigma_tilde, ratio10(radius)};
}

double sigma_tilde_of_radius(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("sigma_tilde_of_radius: radius must be > 0, got " + std::to_string(radius));
    }
    return rhs(radius);
}

double solve_radius(double sigma_tilde) {
    if (!(sigma_tilde > 0.0 && sigma_tilde < 1.0)) {
        throw DomainError("solve_radius: sigma_tilde must lie in (0, 1), got " + std::to_string(sigma_tilde));
    }
    // rhs decreases from 1 at 0+ to 0 at infinity.
    double lo = 0.0;
    double hi = 1.0;
    while (rhs(hi) > sigma_tilde) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) {
            throw ConvergenceError("solve_radius: could not bracket the root");
        }
    }
    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        (rhs(mid) > sigma_tilde ? lo : hi) = mid;
    }
    double radius = 0.5 * (lo + hi);
    for (int it = 0; it < 60; ++it) {
        const double a = ratio10(radius);
        const double g = 2.0 * a / radius - sigma_tilde;
        const double dg = 2.0 * (radius - 2.0 * a - a * a * radius) / (radius * radius);
        double next = radius - g / dg;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        (g > 0.0 ? lo : hi) = radius;
        const double step = std::abs(next - radius);
        radius = next;
        if (step <= 4e-16 * radius) {
            return radius;
        }
    }
    if (std::abs(rhs(radius) - sigma_tilde) <= 1e-12) {
        return radius;
    }
    throw ConvergenceError("solve_radius: Newton did not converge for sigma_tilde=" + std::to_string(sigma_tilde));
}

RadialFields eval_radial_fields(const StationaryState& state, double r) {
    const double R = state.radius();
    if (!(r >= 0.0 && r <= R)) {
        throw DomainError("eval_radial_fields: r must lie in [0, R_S], got " + std::to_string(r));
    }
    const double st = state.sigma_tilde();
    RadialFields f;
    if (r == R) {
        f.sigma = 1.0;
        f.sigma_r = state.bessel_ratio();
        f.sigma_rr = 1.0 - state.q();
        f.p_star = 0.0;
    } else {
        f.sigma = besseli_quotient(0, r, 0, R);
        f.sigma_r = besseli_quotient(1, r, 0, R);
        // I_1'(r) = I_0(r) - I_1(r)/r, with the r -> 0 limit 1/2.
        f.sigma_rr = r > 0.0 ? f.sigma - f.sigma_r / r : 0.5 * besseli_quotient(0, 0.0, 0, R);
        f.p_star = st * (r * r - R * R) / 4.0 - (f.sigma - 1.0);
    }
    f.p_tilde = 1.0 / R;
    f.p_star_r = st * r / 2.0 - f.sigma_r;
    f.p_star_rr = st / 2.0 - f.sigma_rr;
    return f;
}

double assemble_pressure(const StationaryState& state, double mu, double r) {
    const RadialFields f = eval_radial_fields(state, r);
    return f.p_tilde + mu * f.p_star;
}

StationaryBoundaryDerivatives boundary_derivatives(const StationaryState& state) {
    const double R = state.radius();
    const double a = state.bessel_ratio();
    const double q = state.q();
    StationaryBoundaryDerivatives d;
    d.sigma_r = a;
    d.sigma_rr = 1.0 - q;
    d.p_star_r = state.sigma_tilde() * R / 2.0 - a;
    d.p_star_rr = 2.0 * q - 1.0;
    d.p_star_rrr = 1.0 / R - (2.0 + R * R) * a / (R * R);
    return d;
}

}  // namespace fbp
