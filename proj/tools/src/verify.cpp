#include "fbp/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "fbp/bessel.hpp"
#include "fbp/bifurcation.hpp"
#include "fbp/boundary_geometry.hpp"
#include "fbp/cli/artifacts.hpp"
#include "fbp/cli/probes.hpp"
#include "fbp/continuation.hpp"
#include "fbp/mode_perturbation.hpp"

namespace fbp::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CheckResult verdict(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
}

CheckResult check_bessel(const RunConfig& c) {
    double worst = 0.0;
    for (int n = 1; n <= 50; ++n) {
        for (double x : c.bessel_x) {
            if (x > 0.0) worst = std::max(worst, identity_residuals(n, x).max_relative());
        }
    }
    const double tol = c.tolerance("bessel_identity");
    return verdict("bessel_identities", worst <= tol, "max relative residual " + sci(worst) + " (tol " + sci(tol) + ")");
}

CheckResult check_radius(const RunConfig& c) {
    const StationaryState s = c.base();
    const double back = solve_radius(sigma_tilde_of_radius(s.radius()));
    const double res = std::abs(sigma_tilde_of_radius(s.radius()) - s.sigma_tilde());
    const double round_trip = std::abs(back - s.radius()) / s.radius();
    const double tol = c.tolerance("radius_residual");
    return verdict("stationary_radius", res <= tol && round_trip <= tol,
                   "R_S " + fmt17(s.radius()) + ", residual " + sci(res) + ", round trip " + sci(round_trip));
}

// One-sided second-order differences at r = R against the closed forms.
CheckResult check_lemma(const RunConfig& c) {
    const StationaryState s = c.base();
    const double R = s.radius();
    const double h = 1e-4 * R;
    const auto fd = [&](const std::function<double(double)>& f) {
        return (3.0 * f(R) - 4.0 * f(R - h) + f(R - 2.0 * h)) / (2.0 * h);
    };
    const auto field = [&](double RadialFields::*m) {
        return [&s, m](double r) { return eval_radial_fields(s, r).*m; };
    };
    const StationaryBoundaryDerivatives d = boundary_derivatives(s);
    const double pairs[][2] = {
        {fd(field(&RadialFields::sigma)), d.sigma_r},
        {fd(field(&RadialFields::sigma_r)), d.sigma_rr},
        {fd(field(&RadialFields::p_star)), d.p_star_r},
        {fd(field(&RadialFields::p_star_r)), d.p_star_rr},
        {fd(field(&RadialFields::p_star_rr)), d.p_star_rrr},
    };
    double worst = 0.0;
    for (const auto& p : pairs) worst = std::max(worst, std::abs(p[0] - p[1]) / std::max(1.0, std::abs(p[1])));
    const double tol = c.tolerance("lemma_fd");
    return verdict("stationary_derivatives", worst <= tol, "max relative difference " + sci(worst));
}

CheckResult check_pde(const RunConfig& c) {
    const double tol = c.tolerance("pde_residual");
    double worst = 0.0;
    std::string where;
    for (int n : c.mode_range()) {
        for (const BvpResidual& r : perturbation_residuals(c.base(), n, 200, c.seed + static_cast<std::uint64_t>(n))) {
            const double w = std::max(r.interior, r.boundary);
            if (w >= worst) {
                worst = w;
                where = r.field + " n=" + std::to_string(n);
            }
        }
    }
    return verdict("perturbation_pde", worst <= tol, "max residual " + sci(worst) + " (" + where + ")");
}

CheckResult check_dual(const RunConfig& c) {
    std::vector<double> radii = {1.0, 2.0, 5.0};
    radii.push_back(c.base().radius());
    double worst = 0.0;
    for (double R : radii) {
        const StationaryState s = StationaryState::from_radius(R);
        for (int n : c.mode_range()) {
            const double mt = c.tamper_m_tilde ? 0.5 + (2.0 * n + 3.0) / 2.0 * s.q() - m_n(s, n) : m_tilde(s, n);
            const double mu = mu_n(s, n);
            const LambdaPair g = frechet_second_grouped(s, n, mu, mt);
            const LambdaPair r = frechet_second_raw(s, n, mu);
            const double scale = std::max({1.0, std::abs(r.lambda1), std::abs(r.lambda2)});
            worst = std::max({worst, std::abs(g.lambda1 - r.lambda1) / scale, std::abs(g.lambda2 - r.lambda2) / scale});
        }
    }
    const double tol = c.tolerance("dual_assembly");
    return verdict("lambda_dual_assembly", worst <= tol, "max relative difference " + sci(worst));
}

CheckResult check_pitchfork(const RunConfig& c) {
    const StationaryState s = c.base();
    double worst = 0.0;
    bool all = true;
    for (int n : c.mode_range()) {
        const BifurcationReport r = pitchfork_report(s, n, c.tolerance("pitchfork"));
        worst = std::max(worst, std::abs(r.mu_prime_0));
        all = all && r.verdict == Verdict::pitchfork && r.denominator < 0.0;
    }
    return verdict("pitchfork_verdict", all && worst <= c.tolerance("mu_prime"), "max |mu'(0)| " + sci(worst));
}

CheckResult check_monotone(const RunConfig& c) {
    const StationaryState s = c.base();
    bool ok = true;
    double prev = 0.0;
    const int top = std::max(50, c.nmax);
    for (int n = 2; n <= top; ++n) {
        const double mu = mu_n(s, n);
        ok = ok && m_n(s, n) > 0.0 && mu > prev;
        prev = mu;
    }
    return verdict("mn_positive_mu_monotone", ok, "n = 2.." + std::to_string(top));
}

CheckResult check_curvature(const RunConfig& c) {
    const CurvatureSlopes s = curvature_slopes(10, c.seed);
    const double tol = c.tolerance("slope");
    return verdict("curvature_expansion_order", s.worst_deviation <= tol,
                   "slopes " + sci(s.slope[0]) + " " + sci(s.slope[1]) + " " + sci(s.slope[2]) +
                       ", worst deviation " + sci(s.worst_deviation));
}

CheckResult check_expansion(const RunConfig& c) {
    const FbpSolver solver(SolverGrid(c.n_r, c.n_theta), c.base());
    ExpansionOrderOptions opt;
    opt.slope_tolerance = c.tolerance("slope");
    const int n = c.single_mode();
    const ExpansionOrderResult r = verify_expansion_order(solver, n, c.eps_ladder, opt);
    CheckResult out{"expansion_remainder_order", CheckStatus::pass,
                    "slope " + sci(r.slope) + " over " + sci(r.decades) + " decades, status " + to_string(r.status)};
    if (r.status == OrderStatus::floor_warning) out.status = CheckStatus::warn;
    if (r.status == OrderStatus::fail) out.status = CheckStatus::fail;
    return out;
}

CheckResult check_frechet(const RunConfig& c) {
    const StationaryState s = c.base();
    const FbpSolver solver(SolverGrid(c.n_r, c.n_theta), s);
    const int n = c.single_mode();
    const double mu_b = mu_n(s, n);
    const double half = 0.5 * mu_b;
    const double h1 = 1e-4;
    const FCoefficients p1 = solver.evaluate_F(half, BoundaryShape::mode(n, h1));
    const FCoefficients m1 = solver.evaluate_F(half, BoundaryShape::mode(n, -h1));
    const double exact1 = frechet_first_coefficient(s, half, n);
    const double e1 = std::abs((p1.cos(n) - m1.cos(n)) / (2 * h1) - exact1) / std::abs(exact1);
    const double h2 = 1e-3;
    const FCoefficients p2 = solver.evaluate_F(mu_b, BoundaryShape::mode(n, h2));
    const FCoefficients m2 = solver.evaluate_F(mu_b, BoundaryShape::mode(n, -h2));
    const LambdaPair lam = frechet_second(s, n);
    const double e2 = std::max(std::abs((p2.cos(0) + m2.cos(0)) / (h2 * h2) - lam.lambda1) / std::abs(lam.lambda1),
                               std::abs((p2.cos(2 * n) + m2.cos(2 * n)) / (h2 * h2) - lam.lambda2) / std::abs(lam.lambda2));
    return verdict("solver_frechet_oracle", e1 <= c.tolerance("frechet_first") && e2 <= c.tolerance("frechet_second"),
                   "first " + sci(e1) + ", second " + sci(e2));
}

}  // namespace

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::warn: return "WARN";
        case CheckStatus::fail: return "FAIL";
    }
    return "FAIL";
}

std::vector<BvpResidual> perturbation_residuals(const StationaryState& s, int n, int points, std::uint64_t seed) {
    const ModeExpansion e(s, n);
    const double R = s.radius();
    const StationaryBoundaryDerivatives d0 = boundary_derivatives(s);
    const FirstOrderBoundaryDerivatives d1 = e.first_order_boundary();
    const double nn = n;
    const auto S = [n](double t) { return std::cos(n * t); };
    const PolarField zero = [](double, double) { return 0.0; };
    const PolarField sigma1 = [&](double r, double t) { return e.first_order(r).sigma * S(t); };
    const PolarField sigma2 = [&](double r, double t) { return e.second_order_fields(r, t).sigma; };
    struct Problem {
        const char* name;
        PolarField field;
        double shift;
        PolarField source;
        std::function<double(double)> boundary;
    };
    const Problem problems[] = {
        {"sigma1", sigma1, 1.0, zero, [&](double t) { return -d0.sigma_r * S(t); }},
        {"p_tilde1", [&](double r, double t) { return e.first_order(r).p_tilde * S(t); }, 0.0, zero,
         [&](double t) { return (nn * nn - 1.0) * S(t) / (R * R); }},
        {"p_star1", [&](double r, double t) { return e.first_order(r).p_star * S(t); }, 0.0, sigma1,
         [&](double t) { return -d0.p_star_r * S(t); }},
        {"sigma2", sigma2, 1.0, zero,
         [&](double t) { return -0.5 * S(t) * S(t) * d0.sigma_rr - S(t) * S(t) * d1.sigma_r; }},
        {"p_tilde2", [&](double r, double t) { return e.second_order_fields(r, t).p_tilde; }, 0.0, zero,
         [&](double t) {
             const double st = -nn * std::sin(n * t);
             const double stt = -nn * nn * S(t);
             const double k2 = (2.0 * S(t) * stt + S(t) * S(t) + 0.5 * st * st) / (R * R * R);
             return k2 - S(t) * S(t) * d1.p_tilde_r;
         }},
        {"p_star2", [&](double r, double t) { return e.second_order_fields(r, t).p_star; }, 0.0, sigma2,
         [&](double t) { return -0.5 * S(t) * S(t) * d0.p_star_rr - S(t) * S(t) * d1.p_star_r; }},
    };
    Sampler gen(seed);
    std::vector<BvpResidual> out;
    for (const Problem& p : problems) {
        BvpResidual res{p.name, 0.0, 0.0};
        for (int k = 0; k < points; ++k) {
            const double r = gen.uniform(0.05, 0.95) * R;
            const double t = gen.uniform(0.0, 2.0 * kPi);
            const LaplacianSample lap = polar_laplacian(p.field, r, t, R, 2 * n);
            const double v = -lap.laplacian + p.shift * p.field(r, t) - p.source(r, t);
            res.interior = std::max(res.interior, std::abs(v) / std::max(1.0, lap.scale));
            const double tb = gen.uniform(0.0, 2.0 * kPi);
            res.boundary = std::max(res.boundary, std::abs(p.field(R, tb) - p.boundary(tb)));
        }
        out.push_back(res);
    }
    return out;
}

CurvatureSlopes curvature_slopes(int trials, std::uint64_t seed) {
    Sampler gen(seed);
    CurvatureSlopes out;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> cs(6, 0.0), ss(6, 0.0);
        double weight = 0.0;
        for (std::size_t k = 2; k < 6; ++k) {
            cs[k] = gen.uniform(-1.0, 1.0);
            ss[k] = gen.uniform(-1.0, 1.0);
            weight += static_cast<double>(k * k) * (std::abs(cs[k]) + std::abs(ss[k]));
        }
        for (std::size_t k = 2; k < 6; ++k) {
            cs[k] /= weight;
            ss[k] /= weight;
        }
        const double R = gen.uniform(0.5, 1.5);
        double slopes[3];
        double dev = 0.0;
        for (int order = 1; order <= 3; ++order) {
            std::vector<double> eps, err;
            for (double e = 0.1; e > 0.99e-3; e /= 2.0) {
                const PolarCurve curve(R, e, cs, ss);
                double worst = 0.0;
                for (int j = 0; j < 96; ++j) {
                    const double t = 2.0 * kPi * j / 96;
                    worst = std::max(worst, std::abs(curvature_exact(curve, t) - curvature_expansion(curve, t, order)));
                }
                eps.push_back(e);
                err.push_back(worst);
            }
            slopes[order - 1] = loglog_slope(eps, err);
            dev = std::max(dev, std::abs(slopes[order - 1] - (order + 1.0)));
        }
        if (trial == 0 || dev > out.worst_deviation) {
            out.worst_deviation = dev;
            std::copy(slopes, slopes + 3, out.slope);
        }
    }
    return out;
}

std::vector<CheckResult> run_checks(const RunConfig& config) {
    using Check = CheckResult (*)(const RunConfig&);
    const std::pair<const char*, Check> checks[] = {
        {"bessel_identities", check_bessel},
        {"stationary_radius", check_radius},
        {"stationary_derivatives", check_lemma},
        {"perturbation_pde", check_pde},
        {"lambda_dual_assembly", check_dual},
        {"pitchfork_verdict", check_pitchfork},
        {"mn_positive_mu_monotone", check_monotone},
        {"curvature_expansion_order", check_curvature},
        {"expansion_remainder_order", check_expansion},
        {"solver_frechet_oracle", check_frechet},
    };
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : checks) {
        try {
            out.push_back(fn(config));
        } catch (const std::exception& e) {
            out.push_back({name, CheckStatus::fail, std::string("error: ") + e.what()});
        }
    }
    return out;
}

std::string format_report(const std::vector<CheckResult>& results) {
    std::size_t width = 5;
    for (const CheckResult& r : results) width = std::max(width, r.name.size());
    std::ostringstream os;
    for (const CheckResult& r : results) {
        os << r.name << std::string(width - r.name.size() + 2, ' ') << to_string(r.status) << "  " << r.detail << '\n';
    }
    return os.str();
}

}  // namespace fbp::cli
