#include "fbp/bifurcation.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fbp/bessel.hpp"
#include "fbp/errors.hpp"
#include "fbp/mode_perturbation.hpp"

namespace fbp {

namespace {

void require_mode(int n, int lowest) {
    if (n < lowest) {
        throw DomainError("mode index must be >= " + std::to_string(lowest) + ", got " + std::to_string(n));
    }
}

double cubic(int n) { return static_cast<double>(n) * (static_cast<double>(n) * n - 1.0); }

// Projection of f(theta) = c0 + c2 cos(2n theta) recovered on 8n equispaced nodes.
template <class F>
LambdaPair project(int n, F f) {
    const int nodes = 8 * n;
    double c0 = 0.0;
    double c2 = 0.0;
    for (int j = 0; j < nodes; ++j) {
        const double t = 2.0 * std::numbers::pi * j / nodes;
        const double v = f(t);
        c0 += v;
        c2 += v * std::cos(2.0 * n * t);
    }
    return {c0 / nodes, 2.0 * c2 / nodes};
}

}  // namespace

double m_n(const StationaryState& base, int n) {
    require_mode(n, 0);
    return 1.0 - 2.0 * base.q() - base.bessel_ratio() * besseli_ratio(n, base.radius());
}

CheckedValue m_n_checked(const StationaryState& base, int n) {
    const double v = m_n(base, n);
    return {v, v > 0.0};
}

double mu_n(const StationaryState& base, int n) {
    require_mode(n, 2);
    const double R = base.radius();
    return cubic(n) / (R * R * R * m_n(base, n));
}

double frechet_first_coefficient(const StationaryState& base, double mu, int n) {
    require_mode(n, 0);
    const double R = base.radius();
    return -mu * m_n(base, n) + cubic(n) / (R * R * R);
}

double frechet_mu_coefficient(const StationaryState& base, int n) {
    require_mode(n, 2);
    return -m_n(base, n);
}

FrechetSecondTerms frechet_second_terms(const StationaryState& base, int n, double m_tilde_value) {
    require_mode(n, 2);
    const double R = base.radius();
    const double R4 = R * R * R * R;
    const double a = base.bessel_ratio();
    const double q = base.q();
    const double nn = n;
    const double mn = m_n(base, n);
    const double shared = (mn - 0.5 + q) / R;
    FrechetSecondTerms t;
    t.i = -cubic(n) / R4;
    t.iii = -cubic(n) / R4 + (2.0 * nn - 5.0 * nn * nn * nn) / R4;
    t.ii = shared + a * (0.5 - m_tilde_value);
    t.iv = shared + a * (0.5 + nn * (2.0 * nn - 1.0) / (R * R)) -
           m_tilde_value * (besseli_ratio(2 * n, R) + 2.0 * nn / R);
    return t;
}

LambdaPair frechet_second_grouped(const StationaryState& base, int n, double mu, double m_tilde_value) {
    const FrechetSecondTerms t = frechet_second_terms(base, n, m_tilde_value);
    return {t.constant(mu), t.cos2n(mu)};
}

LambdaPair frechet_second_raw(const StationaryState& base, int n, double mu) {
    require_mode(n, 2);
    const double R = base.radius();
    const StationaryBoundaryDerivatives s0 = boundary_derivatives(base);
    const FirstOrderBoundaryDerivatives s1 = first_order_boundary_derivatives(base, n);
    const ModeExpansion exp(base, n, m_tilde_from_boundary(base, n));
    const SecondOrderBoundaryDerivatives s2 = exp.second_order_boundary_derivatives();
    const double nn = n;
    // d^2/d eps^2 of dp/dn on r = R + eps cos(n theta), p = p_tilde + mu p_star.
    return project(n, [&](double t) {
        const double c = std::cos(nn * t);
        const double sn = std::sin(nn * t);
        const double c2 = std::cos(2.0 * nn * t);
        const double stationary = (s0.p_tilde_rrr + mu * s0.p_star_rrr) * c * c;
        const double first_r = 2.0 * (s1.p_tilde_rr + mu * s1.p_star_rr) * c * c;
        // -2 (rho_theta / R^2) p_1,theta with rho_theta = -n sin(n theta)
        const double first_t = 2.0 / (R * R) * (s1.p_tilde_theta + mu * s1.p_star_theta) * sn * nn * sn;
        const double second = 2.0 * ((s2.p_tilde_r.mode0 + mu * s2.p_star_r.mode0) +
                                     (s2.p_tilde_r.mode2n + mu * s2.p_star_r.mode2n) * c2);
        return stationary + first_r + first_t + second;
    });
}

LambdaPair frechet_second_substituted(const StationaryState& base, int n) {
    require_mode(n, 2);
    const double R = base.radius();
    const double a = base.bessel_ratio();
    const double q = base.q();
    const double mu = mu_n(base, n);
    const double nn = n;
    const double k = cubic(n) / (R * R * R);  // mu_n M_n
    const double mu_mt = mu / 2.0 + (2.0 * nn - 3.0) * mu * base.sigma_tilde() / 4.0 - k;
    const double R4 = R * R * R * R;
    const double shared = (k - mu / 2.0 + mu * q) / R;
    LambdaPair out;
    out.lambda1 = -cubic(n) / R4 + shared + a * (mu / 2.0 - mu_mt);
    out.lambda2 = -cubic(n) / R4 + (2.0 * nn - 5.0 * nn * nn * nn) / R4 + shared +
                  a * mu * (0.5 + nn * (2.0 * nn - 1.0) / (R * R)) -
                  mu_mt * (besseli_ratio(2 * n, R) + 2.0 * nn / R);
    return out;
}

LambdaPair frechet_second(const StationaryState& base, int n) {
    return frechet_second_grouped(base, n, mu_n(base, n), m_tilde(base, n));
}

std::string to_string(Verdict v) { return v == Verdict::pitchfork ? "pitchfork" : "transcritical"; }

BifurcationReport pitchfork_report(const StationaryState& base, int n, double tolerance) {
    require_mode(n, 2);
    if (!(tolerance > 0.0)) {
        throw DomainError("pitchfork_report: tolerance must be positive");
    }
    BifurcationReport rep;
    rep.n = n;
    const CheckedValue mn = m_n_checked(base, n);
    rep.m_n = mn.value;
    rep.m_n_positive = mn.ok;
    rep.m_tilde = m_tilde(base, n);
    rep.mu_n = mu_n(base, n);
    const LambdaPair lam = frechet_second(base, n);
    rep.lambda1 = lam.lambda1;
    rep.lambda2 = lam.lambda2;
    rep.odd_mode = n % 2 != 0;

    const int nodes = 4 * n + 1;
    const long double w = 2.0L * std::numbers::pi_v<long double> / nodes;
    const double f_mu = frechet_mu_coefficient(base, n);
    // exact angle reduction, extended-precision sums
    const auto node_cos = [&](long k, int j) { return std::cos(w * static_cast<long double>((k * j) % nodes)); };
    long double num = 0.0L;
    long double den = 0.0L;
    for (int j = 0; j < nodes; ++j) {
        const long double x0 = node_cos(n, j);
        num += (lam.lambda1 + lam.lambda2 * node_cos(2L * n, j)) * x0;
        den += f_mu * x0 * x0;
    }
    rep.numerator = static_cast<double>(w * num);
    rep.denominator = static_cast<double>(2.0L * w * den);
    rep.mu_prime_0 = -rep.numerator / rep.denominator;
    rep.verdict = std::abs(rep.mu_prime_0) <= tolerance ? Verdict::pitchfork : Verdict::transcritical;
    return rep;
}

ModeZeroSignCheck mode_zero_sign_check(const StationaryState& base, double mu) {
    const double a = base.bessel_ratio();
    ModeZeroSignCheck c;
    c.general = frechet_first_coefficient(base, mu, 0);
    c.displayed = mu * (2.0 * base.q() - 1.0 - a * a);
    c.general_positive = c.general > 0.0;
    c.displayed_positive = c.displayed > 0.0;
    return c;
}

}  // namespace fbp
