#include "fbp/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "fbp/errors.hpp"

namespace fbp {

namespace {

constexpr double kSeriesLimit = 15.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

ScaledDouble normalized(double mantissa, long exponent) {
    if (mantissa == 0.0 || !std::isfinite(mantissa)) {
        return {mantissa, 0};
    }
    int e = 0;
    const double m = std::frexp(mantissa, &e);
    return {m, exponent + e};
}

void check_domain(int n, double x, int max_order) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError("besseli: argument must be finite and >= 0, got " + std::to_string(x));
    }
    if (n < 0 || n > max_order) {
        throw DomainError("besseli: order must lie in [0, " + std::to_string(max_order) + "], got " +
                          std::to_string(n));
    }
}

// (x/2)^n / n! * sum_k (x^2/4)^k / (k! (n+k)_k), all terms positive.
ScaledDouble series(int n, double x) {
    ScaledDouble prefactor{0.5, 1};
    const double half = 0.5 * x;
    for (int k = 1; k <= n; ++k) {
        prefactor *= half / k;
    }
    const double q = half * half;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * static_cast<double>(n + k));
        sum += term;
        if (term < 0.25 * kEps * sum) {
            break;
        }
    }
    prefactor *= sum;
    return prefactor;
}

double continued_fraction_ratio(int n, double x) {
    // I_{n+1}/I_n = 1 / (b_1 + 1 / (b_2 + ...)), b_j = 2 (n + j) / x.
    constexpr double tiny = 1e-300;
    double f = tiny;
    double c = f;
    double d = 0.0;
    for (int j = 1; j < 200000; ++j) {
        const double b = 2.0 * (n + j) / x;
        d = b + d;
        if (d == 0.0) d = tiny;
        c = b + 1.0 / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return f;
        }
    }
    throw ConvergenceError("besseli_ratio: continued fraction did not converge for n=" + std::to_string(n) +
                           ", x=" + std::to_string(x));
}

ScaledDouble miller(int n, double x) {
    const int top = std::max(n + 1, 10 + static_cast<int>(std::ceil(9.0 * std::sqrt(x))));
    std::vector<double> ratio(static_cast<std::size_t>(top));
    ratio[static_cast<std::size_t>(top - 1)] = continued_fraction_ratio(top - 1, x);
    for (int k = top - 1; k >= 1; --k) {
        ratio[static_cast<std::size_t>(k - 1)] = 1.0 / (2.0 * k / x + ratio[static_cast<std::size_t>(k)]);
    }
    // e^x = I_0 (1 + 2 sum_{k>=1} I_k / I_0); the products stay <= 1.
    double product = 1.0;
    double tail = 0.0;
    for (int k = 1; k <= top; ++k) {
        product *= ratio[static_cast<std::size_t>(k - 1)];
        tail += product;
        if (product < 0.25 * kEps * tail) {
            break;
        }
    }
    ScaledDouble value = ScaledDouble::exp(x);
    value *= 1.0 / (1.0 + 2.0 * tail);
    for (int k = 0; k < n; ++k) {
        value *= ratio[static_cast<std::size_t>(k)];
    }
    return value;
}

ScaledDouble scaled_unchecked(int n, double x) {
    if (x == 0.0) {
        return ScaledDouble::from_double(n == 0 ? 1.0 : 0.0);
    }
    return x <= kSeriesLimit ? series(n, x) : miller(n, x);
}

}  // namespace

ScaledDouble ScaledDouble::from_double(double v) { return normalized(v, 0); }

ScaledDouble ScaledDouble::exp(double x) {
    const long double ln2 = 0.693147180559945309417232121458176568L;
    const long double k = std::floor(static_cast<long double>(x) / ln2);
    const long double rest = static_cast<long double>(x) - k * ln2;
    return normalized(static_cast<double>(std::exp(rest)), static_cast<long>(k));
}

double ScaledDouble::to_double() const { return std::ldexp(mantissa, static_cast<int>(std::clamp<long>(exponent, -4000, 4000))); }

bool ScaledDouble::representable() const {
    return mantissa == 0.0 || exponent <= std::numeric_limits<double>::max_exponent;
}

double ScaledDouble::log() const {
    return std::log(std::abs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

ScaledDouble& ScaledDouble::operator*=(const ScaledDouble& other) {
    *this = normalized(mantissa * other.mantissa, exponent + other.exponent);
    return *this;
}

ScaledDouble& ScaledDouble::operator*=(double factor) {
    *this = normalized(mantissa * factor, exponent);
    return *this;
}

ScaledDouble& ScaledDouble::operator/=(const ScaledDouble& other) {
    if (other.mantissa == 0.0) {
        throw DomainError("ScaledDouble: division by zero");
    }
    *this = normalized(mantissa / other.mantissa, exponent - other.exponent);
    return *this;
}

ScaledDouble besseli_scaled(int n, double x) {
    check_domain(n, x, kMaxBesselOrder);
    return scaled_unchecked(n, x);
}

BesselValue besseli(int n, double x) {
    check_domain(n, x, kMaxBesselOrder);
    BesselValue out;
    out.order = n;
    out.argument = x;
    out.scaled = scaled_unchecked(n, x);
    if (x == 0.0) {
        out.value = out.scaled.to_double();
        out.derivative = n == 1 ? 0.5 : 0.0;
        return out;
    }
    // I'_n = I_n (n/x + I_{n+1}/I_n); every term positive.
    ScaledDouble derivative = out.scaled;
    derivative *= n / x + continued_fraction_ratio(n, x);
    out.overflow = !out.scaled.representable() || !derivative.representable();
    if (out.overflow) {
        out.value = std::numeric_limits<double>::infinity();
        out.derivative = std::numeric_limits<double>::infinity();
    } else {
        out.value = out.scaled.to_double();
        out.derivative = derivative.to_double();
    }
    return out;
}

double besseli_quotient(int n, double x, int m, double y) {
    const ScaledDouble num = besseli_scaled(n, x);
    const ScaledDouble den = besseli_scaled(m, y);
    return (num / den).to_double();
}

double besseli_ratio(int n, double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("besseli_ratio: argument must be > 0, got " + std::to_string(x));
    }
    if (n < 0) {
        throw DomainError("besseli_ratio: order must be >= 0");
    }
    return continued_fraction_ratio(n, x);
}

double IdentityResiduals::max_relative() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < absolute.size(); ++i) {
        worst = std::max(worst, scale[i] > 0.0 ? absolute[i] / scale[i] : absolute[i]);
    }
    return worst;
}

IdentityResiduals identity_residuals(int n, double x) {
    if (n < 1 || n > kMaxBesselOrder - 1) {
        throw DomainError("identity_residuals: order must lie in [1, " + std::to_string(kMaxBesselOrder - 1) + "]");
    }
    if (!(x > 0.0)) {
        throw DomainError("identity_residuals: argument must be > 0");
    }
    // Work relative to I_n so large arguments stay in range.
    const ScaledDouble base = besseli_scaled(n, x);
    const auto rel = [&](int k) { return (besseli_scaled(k, x) / base).to_double(); };
    const double prev = rel(n - 1);
    const double cur = 1.0;
    const double next = rel(n + 1);
    const double next2 = rel(n + 2 <= kMaxBesselOrder ? n + 2 : n + 1);
    const double deriv = 0.5 * (prev + next);
    const double deriv_next = n + 2 <= kMaxBesselOrder ? 0.5 * (cur + next2) : next * ((n + 1) / x + besseli_ratio(n + 1, x));
    const double nx = n / x;

    IdentityResiduals out;
    out.absolute[0] = std::abs(deriv + nx * cur - prev);
    out.scale[0] = std::max({std::abs(deriv), nx * cur, prev});
    out.absolute[1] = std::abs(deriv - nx * cur - next);
    out.scale[1] = std::max({std::abs(deriv), nx * cur, next});
    out.absolute[2] = std::abs(x * cur - (n + 1) * next - x * deriv_next);
    out.scale[2] = std::max({x * cur, (n + 1) * next, x * std::abs(deriv_next)});
    out.absolute[3] = std::abs(prev - next - 2.0 * nx * cur);
    out.scale[3] = std::max({prev, next, 2.0 * nx * cur});

    // Report in the units of I_n(x) itself when that is representable.
    const double unit = base.representable() ? base.to_double() : 1.0;
    for (std::size_t i = 0; i < 4; ++i) {
        out.absolute[i] *= unit;
        out.scale[i] *= unit;
    }
    return out;
}

}  // namespace fbp
