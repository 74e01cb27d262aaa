#pragma once

#include <string>

#include "fbp/radial_stationary.hpp"

namespace fbp {

/// M_n = 1 - 2 I_1/(R I_0) - I_1 I_{n+1} / (I_0 I_n), defined for n >= 0.
double m_n(const StationaryState& base, int n);

struct CheckedValue {
    double value = 0.0;
    bool ok = true;  // false when M_n <= 0, which would point at a kernel bug
};

CheckedValue m_n_checked(const StationaryState& base, int n);

/// mu_n = n (n^2 - 1) / (R^3 M_n), n >= 2.
double mu_n(const StationaryState& base, int n);

/// cos(n theta) coefficient of F_R(mu, 0)[cos(n theta)] = -mu M_n + n (n^2 - 1) / R^3.
double frechet_first_coefficient(const StationaryState& base, double mu, int n);

/// cos(n theta) coefficient of F_{mu R}[cos(n theta)] = -M_n.
double frechet_mu_coefficient(const StationaryState& base, int n);

/// F_RR[cos n theta, cos n theta] = (I + mu II) + (III + mu IV) cos(2n theta).
struct FrechetSecondTerms {
    double i = 0.0;
    double ii = 0.0;
    double iii = 0.0;
    double iv = 0.0;

    [[nodiscard]] double constant(double mu) const { return i + mu * ii; }
    [[nodiscard]] double cos2n(double mu) const { return iii + mu * iv; }
};

struct LambdaPair {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
};

/// Grouped closed form of the four terms, valid for every mu, with M~_n supplied.
FrechetSecondTerms frechet_second_terms(const StationaryState& base, int n, double m_tilde_value);

/// Lambda_1, Lambda_2 at mu from the grouped terms with the supplied M~_n.
LambdaPair frechet_second_grouped(const StationaryState& base, int n, double mu, double m_tilde_value);

/// Lambda_1, Lambda_2 at mu summed term by term from the raw boundary
/// derivatives (stationary, first and second order), then projected onto
/// 1 and cos(2n theta) by quadrature. M~_n comes from the sigma_2 boundary data.
LambdaPair frechet_second_raw(const StationaryState& base, int n, double mu);

/// Lambda_1, Lambda_2 at mu_n after eliminating M_n and M~_n through
/// mu_n M_n = n(n^2-1)/R^3 and mu_n M~_n = mu_n/2 + (2n-3) mu_n sigma_tilde/4 - n(n^2-1)/R^3.
LambdaPair frechet_second_substituted(const StationaryState& base, int n);

/// Lambda_1, Lambda_2 at mu = mu_n (grouped form, closed-form M~_n).
LambdaPair frechet_second(const StationaryState& base, int n);

enum class Verdict { pitchfork, transcritical };

std::string to_string(Verdict v);

struct BifurcationReport {
    int n = 0;
    double m_n = 0.0;
    double m_tilde = 0.0;
    double mu_n = 0.0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double numerator = 0.0;    // <l, F_RR[x0, x0]>
    double denominator = 0.0;  // 2 <l, F_muR[x0]>
    double mu_prime_0 = 0.0;
    Verdict verdict = Verdict::pitchfork;
    bool m_n_positive = true;
    bool odd_mode = false;  // n odd: outside the even-mode subspace, computed all the same
};

/// mu'(0) = -<l, F_RR[x0,x0]> / (2 <l, F_muR[x0]>) with x0 = cos(n theta) and
/// l(s) = integral of cos(n theta) s over [0, 2 pi], both pairings by
/// (4n+1)-point trapezoidal quadrature.
BifurcationReport pitchfork_report(const StationaryState& base, int n, double tolerance = 1e-10);

/// The n = 0 coefficient in two forms: the general -mu M_0 and the
/// displayed mu (2q - 1 - a^2), a = I_1/I_0.
struct ModeZeroSignCheck {
    double general = 0.0;
    double displayed = 0.0;
    bool general_positive = false;
    bool displayed_positive = false;
};

ModeZeroSignCheck mode_zero_sign_check(const StationaryState& base, double mu);

}  // namespace fbp
