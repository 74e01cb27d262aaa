#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace fbp::cli {

using PolarField = std::function<double(double r, double theta)>;

/// First and second derivative at x of f on [lo, hi], from the Chebyshev
/// series through `points` Chebyshev-Lobatto samples.
inline std::pair<double, double> chebyshev_derivatives(const std::function<double(double)>& f, double lo, double hi,
                                                       double x, int points = 18) {
    const int m = points - 1;
    std::vector<double> v(static_cast<std::size_t>(points));
    for (int j = 0; j <= m; ++j) {
        const double t = std::cos(std::numbers::pi * j / m);
        v[static_cast<std::size_t>(j)] = f(0.5 * (lo + hi) + 0.5 * (hi - lo) * t);
    }
    std::vector<double> c(static_cast<std::size_t>(points), 0.0);
    for (int k = 0; k <= m; ++k) {
        double s = 0.0;
        for (int j = 0; j <= m; ++j) {
            const double w = (j == 0 || j == m) ? 0.5 : 1.0;
            s += w * v[static_cast<std::size_t>(j)] * std::cos(std::numbers::pi * k * j / m);
        }
        c[static_cast<std::size_t>(k)] = 2.0 * s / m;
    }
    c[0] *= 0.5;
    c[static_cast<std::size_t>(m)] *= 0.5;
    // coefficients of the derivative series
    const auto derive = [m](const std::vector<double>& a) {
        std::vector<double> d(a.size(), 0.0);
        for (int k = m - 1; k >= 0; --k) {
            const double next = k + 2 <= m ? d[static_cast<std::size_t>(k + 2)] : 0.0;
            d[static_cast<std::size_t>(k)] = next + 2.0 * (k + 1) * a[static_cast<std::size_t>(k + 1)];
        }
        d[0] *= 0.5;
        return d;
    };
    const auto eval = [](const std::vector<double>& a, double t) {
        double b1 = 0.0, b2 = 0.0;
        for (std::size_t k = a.size(); k-- > 1;) {
            const double b0 = 2.0 * t * b1 - b2 + a[k];
            b2 = b1;
            b1 = b0;
        }
        return t * b1 - b2 + a[0];
    };
    const double scale = 2.0 / (hi - lo);
    const double t = (2.0 * x - lo - hi) / (hi - lo);
    const std::vector<double> d1 = derive(c);
    const std::vector<double> d2 = derive(d1);
    return {scale * eval(d1, t), scale * scale * eval(d2, t)};
}

/// Second angular derivative at theta of a trigonometric polynomial of
/// degree below samples/2, from its discrete Fourier series.
inline double angular_second_derivative(const std::function<double(double)>& f, double theta, int samples) {
    std::vector<double> v(static_cast<std::size_t>(samples));
    for (int j = 0; j < samples; ++j) v[static_cast<std::size_t>(j)] = f(theta + 2.0 * std::numbers::pi * j / samples);
    double out = 0.0;
    for (int k = 1; k < samples / 2; ++k) {
        std::complex<double> ck = 0.0;
        for (int j = 0; j < samples; ++j) {
            ck += v[static_cast<std::size_t>(j)] * std::polar(1.0, -2.0 * std::numbers::pi * k * j / samples);
        }
        // value at j = 0 of the k-th harmonic pair, times -k^2
        out += -static_cast<double>(k) * k * 2.0 * ck.real() / samples;
    }
    return out;
}

struct LaplacianSample {
    double laplacian = 0.0;
    double scale = 0.0;  // largest term magnitude, for relative residuals
};

/// Polar Laplacian f_rr + f_r / r + f_tt / r^2 at (r, theta), 0 < r < radius.
/// The radial window stays inside [0, radius].
inline LaplacianSample polar_laplacian(const PolarField& f, double r, double theta, double radius, int bandwidth) {
    const double half = 0.3 * radius;
    const double lo = std::max(0.0, r - half);
    const double hi = std::min(radius, r + half);
    const auto [fr, frr] = chebyshev_derivatives([&](double x) { return f(x, theta); }, lo, hi, r);
    const double ftt = angular_second_derivative([&](double t) { return f(r, t); }, theta, 2 * bandwidth + 4);
    const double value = f(r, theta);
    LaplacianSample s;
    s.laplacian = frr + fr / r + ftt / (r * r);
    s.scale = std::max({std::abs(frr), std::abs(fr / r), std::abs(ftt / (r * r)), std::abs(value)});
    return s;
}

/// Deterministic sampler for randomized checks.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

private:
    std::mt19937_64 rng_;
};

/// Least-squares slope of log(y) against log(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace fbp::cli
