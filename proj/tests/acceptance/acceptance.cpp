// Acceptance driver: one PASS/FAIL line per criterion, exit 1 on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "fbp/bifurcation.hpp"
#include "fbp/cli/verify.hpp"
#include "fbp/continuation.hpp"
#include "fbp/errors.hpp"

namespace {

using fbp::StationaryState;

// Pinned tolerances and runtime limits.
constexpr double kAc1Reference = 8.6445;
constexpr double kAc1Relative = 5e-3;
constexpr double kAc2MuPrime = 1e-12;
constexpr double kAc4Residual = 1e-9;
constexpr int kAc4Points = 200;
constexpr double kAc5Slope = 0.2;
constexpr double kAc6First = 1e-6;
constexpr double kAc6Second = 1e-4;
constexpr double kAc7Slope = 0.2;
constexpr double kAc8Linear = 1e-3;
constexpr double kAc8Limit = 1e-2;
constexpr double kAc8EpsMax = 0.2;

struct Outcome {
    bool ok = false;
    std::string detail;
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

Outcome ac1() {
    const double mu = fbp::mu_n(StationaryState::from_radius(2.0), 2);
    const double rel = std::abs(mu - kAc1Reference) / kAc1Reference;
    return {rel <= kAc1Relative, "mu_2 = " + std::to_string(mu) + ", relative deviation " + sci(rel)};
}

Outcome ac2() {
    double worst = 0.0;
    double worst_den = 0.0;
    bool ok = true;
    for (double R : {1.0, 2.0, 5.0}) {
        const StationaryState s = StationaryState::from_radius(R);
        for (int n = 2; n <= 12; ++n) {
            const fbp::BifurcationReport r = fbp::pitchfork_report(s, n);
            const double expect = -2.0 * std::numbers::pi * r.m_n;
            const double den = std::abs(r.denominator - expect) / std::abs(expect);
            worst = std::max(worst, std::abs(r.mu_prime_0));
            worst_den = std::max(worst_den, den);
            ok = ok && std::abs(r.mu_prime_0) <= kAc2MuPrime && r.denominator < 0.0 && den <= 1e-12 &&
                 r.verdict == fbp::Verdict::pitchfork;
        }
    }
    return {ok, "max |mu'(0)| " + sci(worst) + ", denominator vs -2 pi M_n " + sci(worst_den)};
}

Outcome ac3() {
    bool ok = true;
    double smallest = INFINITY;
    for (double R : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        const StationaryState s = StationaryState::from_radius(R);
        double prev = 0.0;
        for (int n = 2; n <= 50; ++n) {
            const double m = fbp::m_n(s, n);
            const double mu = fbp::mu_n(s, n);
            smallest = std::min(smallest, m);
            ok = ok && m > 0.0 && mu > prev;
            prev = mu;
        }
    }
    return {ok, "min M_n " + sci(smallest)};
}

Outcome ac4() {
    double worst = 0.0;
    std::string where;
    for (double R : {1.0, 2.0}) {
        for (int n : {2, 3, 4}) {
            for (const fbp::cli::BvpResidual& r :
                 fbp::cli::perturbation_residuals(StationaryState::from_radius(R), n, kAc4Points, 97 + n)) {
                const double w = std::max(r.interior, r.boundary);
                if (w >= worst) {
                    worst = w;
                    where = r.field + " R=" + std::to_string(R).substr(0, 3) + " n=" + std::to_string(n);
                }
            }
        }
    }
    return {worst <= kAc4Residual, "max residual " + sci(worst) + " (" + where + ")"};
}

Outcome ac5() {
    const fbp::cli::CurvatureSlopes s = fbp::cli::curvature_slopes(10, 5);
    return {s.worst_deviation <= kAc5Slope, "worst slopes " + std::to_string(s.slope[0]) + " " +
                                                 std::to_string(s.slope[1]) + " " + std::to_string(s.slope[2])};
}

Outcome ac6() {
    const StationaryState s = StationaryState::from_radius(2.0);
    const fbp::FbpSolver solver(fbp::SolverGrid(40, 64), s);
    double e1 = 0.0;
    double e2 = 0.0;
    for (int n : {2, 3}) {
        const double mu = fbp::mu_n(s, n);
        const double h1 = 1e-4;
        const fbp::FCoefficients p = solver.evaluate_F(0.5 * mu, fbp::BoundaryShape::mode(n, h1));
        const fbp::FCoefficients m = solver.evaluate_F(0.5 * mu, fbp::BoundaryShape::mode(n, -h1));
        const double exact = fbp::frechet_first_coefficient(s, 0.5 * mu, n);
        e1 = std::max(e1, std::abs((p.cos(n) - m.cos(n)) / (2 * h1) - exact) / std::abs(exact));
        const double h2 = 1e-3;
        const fbp::FCoefficients p2 = solver.evaluate_F(mu, fbp::BoundaryShape::mode(n, h2));
        const fbp::FCoefficients m2 = solver.evaluate_F(mu, fbp::BoundaryShape::mode(n, -h2));
        const fbp::LambdaPair lam = fbp::frechet_second(s, n);
        e2 = std::max({e2, std::abs((p2.cos(0) + m2.cos(0)) / (h2 * h2) - lam.lambda1) / std::abs(lam.lambda1),
                       std::abs((p2.cos(2 * n) + m2.cos(2 * n)) / (h2 * h2) - lam.lambda2) / std::abs(lam.lambda2)});
    }
    return {e1 <= kAc6First && e2 <= kAc6Second, "first-derivative error " + sci(e1) + ", second " + sci(e2)};
}

Outcome ac7() {
    const fbp::FbpSolver solver(fbp::SolverGrid(40, 64), StationaryState::from_radius(2.0));
    std::vector<double> eps;
    for (int k = 0; k < 8; ++k) eps.push_back(0.1 / std::pow(2.0, k));
    fbp::ExpansionOrderOptions opt;
    opt.slope_tolerance = kAc7Slope;
    const fbp::ExpansionOrderResult r = fbp::verify_expansion_order(solver, 2, eps, opt);
    const bool ok = r.status != fbp::OrderStatus::fail && std::abs(r.slope - 3.0) <= kAc7Slope;
    return {ok, "slope " + std::to_string(r.slope) + " over " + std::to_string(r.decades) + " decades, " +
                    fbp::to_string(r.status)};
}

Outcome ac8() {
    const StationaryState s = StationaryState::from_radius(2.0);
    const fbp::FbpSolver solver(fbp::SolverGrid(20, 32), s);
    const fbp::ContinuationBranch b = fbp::continue_branch(solver, 2, kAc8EpsMax);
    const fbp::MuSecondEstimate fit = fbp::estimate_mu_second(b);
    const double mu2 = fbp::mu_n(s, 2);
    const double limit = std::abs(fit.constant - mu2) / mu2;
    const bool linear_ok = std::abs(fit.linear) <= kAc8Linear * std::abs(fit.quadratic) * fit.eps_max;
    // endpoints: mode-2 dominated and related by a quarter turn
    const fbp::BoundaryShape& lo = b.points.front().solution.boundary;
    const fbp::BoundaryShape& hi = b.points.back().solution.boundary;
    bool shape_ok = lo.cos_coeff(2) < 0.0 && hi.cos_coeff(2) > 0.0;
    double phase = 0.0;
    for (int k = 0; k <= std::max(lo.highest_mode(), hi.highest_mode()); ++k) {
        if (k != 2) shape_ok = shape_ok && std::abs(hi.cos_coeff(k)) < 0.2 * std::abs(hi.cos_coeff(2));
        phase = std::max(phase, std::abs(lo.cos_coeff(k) - std::cos(k * std::numbers::pi / 2) * hi.cos_coeff(k)));
    }
    shape_ok = shape_ok && phase <= 1e-6;
    return {linear_ok && limit <= kAc8Limit && shape_ok && b.complete,
            std::to_string(b.points.size()) + " points, eps in [" + std::to_string(b.points.front().epsilon) + ", " +
                std::to_string(b.points.back().epsilon) + "], limit mu " + std::to_string(fit.constant) +
                " (rel " + sci(limit) + "), |a| " + sci(std::abs(fit.linear)) + " vs " +
                sci(kAc8Linear * std::abs(fit.quadratic) * fit.eps_max) + ", quarter-turn mismatch " + sci(phase)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* title;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC1", "bifurcation point mu_2 at R_S = 2", 1.0, ac1},
        {"AC2", "pitchfork verdict, n in [2, 12], R_S in {1, 2, 5}", 1.0, ac2},
        {"AC3", "M_n > 0 and mu_n increasing, n in [2, 50]", 1.0, ac3},
        {"AC4", "perturbation fields solve their boundary-value problems", 5.0, ac4},
        {"AC5", "curvature expansion orders 1..3", 1.0, ac5},
        {"AC6", "solver Frechet derivatives vs closed forms at 40 x 64", 60.0, ac6},
        {"AC7", "expansion remainder of order 3 at 40 x 64", 120.0, ac7},
        {"AC8", "branch reproduction at 20 x 32", 600.0, ac8},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.limit_seconds;
        const bool ok = o.ok && in_time;
        failures += ok ? 0 : 1;
        std::printf("%s %s  %s: %s [%.2f s, limit %.0f s%s]\n", c.id, ok ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                    secs, c.limit_seconds, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
