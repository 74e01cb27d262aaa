#pragma once

#include <array>

namespace fbp {

/// Largest supported order for the modified Bessel kernel.
inline constexpr int kMaxBesselOrder = 200;

/// Floating value stored as mantissa * 2^exponent so that I_n(x) for large
/// x or large n can be carried past the range of double.
struct ScaledDouble {
    double mantissa = 0.0;  // |mantissa| in [0.5, 1) or exactly 0
    long exponent = 0;

    static ScaledDouble from_double(double v);
    /// exp(x) without overflow.
    static ScaledDouble exp(double x);

    [[nodiscard]] double to_double() const;  // +-inf / 0 outside the double range
    [[nodiscard]] bool representable() const;
    [[nodiscard]] double log() const;         // natural log of |value|

    ScaledDouble& operator*=(const ScaledDouble& other);
    ScaledDouble& operator*=(double factor);
    ScaledDouble& operator/=(const ScaledDouble& other);

    friend ScaledDouble operator*(ScaledDouble lhs, const ScaledDouble& rhs) { return lhs *= rhs; }
    friend ScaledDouble operator/(ScaledDouble lhs, const ScaledDouble& rhs) { return lhs /= rhs; }
};

/// I_n(x) together with dI_n/dx.
///
/// When the true value exceeds the double range, `overflow` is set, `value`
/// and `derivative` are +inf, and `scaled` still holds the exact magnitude.
struct BesselValue {
    int order = 0;
    double argument = 0.0;
    double value = 0.0;
    double derivative = 0.0;
    ScaledDouble scaled;
    bool overflow = false;
};

/// Modified Bessel function of the first kind, integer order 0 <= n <= 200.
///
/// Power series for x <= 15; above that a Miller backward recurrence on the
/// ratios I_{k+1}/I_k, seeded by a continued fraction and normalised with
/// e^x = I_0 + 2 sum_k I_k. The derivative uses I'_n = I_n (n/x + I_{n+1}/I_n).
/// Throws DomainError for x < 0 or n outside [0, 200].
BesselValue besseli(int n, double x);

/// I_n(x) in scaled form (never overflows). Same domain as besseli.
ScaledDouble besseli_scaled(int n, double x);

/// I_n(x) / I_m(y) evaluated in scaled arithmetic.
double besseli_quotient(int n, double x, int m, double y);

/// I_{n+1}(x) / I_n(x) by continued fraction (modified Lentz). x > 0.
double besseli_ratio(int n, double x);

struct IdentityResiduals {
    std::array<double, 4> absolute{};
    std::array<double, 4> scale{};  // magnitude of the largest term in each identity

    [[nodiscard]] double max_relative() const;
};

/// Residuals of the recurrence identities at (n, x), n >= 1, x > 0:
///   [0] I'_n + (n/x) I_n - I_{n-1}
///   [1] I'_n - (n/x) I_n - I_{n+1}
///   [2] x I_n - (n+1) I_{n+1} - x I'_{n+1}   (d/dx (x^{n+1} I_{n+1}) = x^{n+1} I_n, divided by x^n)
///   [3] I_{n-1} - I_{n+1} - (2n/x) I_n
/// I'_n here is (I_{n-1} + I_{n+1}) / 2 built from independent evaluations.
IdentityResiduals identity_residuals(int n, double x);

}  // namespace fbp
