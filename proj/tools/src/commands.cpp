#include <cmath>
#include <numbers>
#include <ostream>

#include <nlohmann/json.hpp>

#include "fbp/bessel.hpp"
#include "fbp/bifurcation.hpp"
#include "fbp/cli/app.hpp"
#include "fbp/cli/artifacts.hpp"
#include "fbp/cli/verify.hpp"
#include "fbp/continuation.hpp"
#include "fbp/errors.hpp"
#include "fbp/mode_perturbation.hpp"

namespace fbp::cli {

namespace {

using json = nlohmann::ordered_json;

json geometry_json(const RunConfig& c, const StationaryState& s) {
    json g;
    g["input"] = c.sigma_tilde ? "sigma_tilde" : "radius";
    g["radius"] = s.radius();
    g["sigma_tilde"] = s.sigma_tilde();
    return g;
}

const char* terms_name(ExpansionTerms t) {
    switch (t) {
        case ExpansionTerms::full: return "full";
        case ExpansionTerms::drop_second: return "drop_second";
        case ExpansionTerms::drop_both: return "drop_both";
    }
    return "full";
}

}  // namespace

int cmd_radius(const RunConfig& c, std::ostream& out) {
    const StationaryState s = c.base();
    const StationaryBoundaryDerivatives d = boundary_derivatives(s);
    const RadialFields center = eval_radial_fields(s, 0.0);
    json j = geometry_json(c, s);
    j["residual"] = std::abs(sigma_tilde_of_radius(s.radius()) - s.sigma_tilde());
    j["bessel_ratio"] = s.bessel_ratio();
    j["boundary_derivatives"] = {
        {"sigma_r", d.sigma_r},       {"sigma_rr", d.sigma_rr},       {"p_tilde_r", d.p_tilde_r},
        {"p_tilde_rr", d.p_tilde_rr}, {"p_tilde_rrr", d.p_tilde_rrr}, {"p_star_r", d.p_star_r},
        {"p_star_rr", d.p_star_rr},   {"p_star_rrr", d.p_star_rrr},
    };
    j["center"] = {{"sigma", center.sigma}, {"p_tilde", center.p_tilde}, {"p_star", center.p_star}};
    const std::string text = j.dump(2) + "\n";
    write_text(c.out / "radius.json", text);
    out << text;
    return kExitOk;
}

int cmd_bessel_table(const RunConfig& c, std::ostream& out) {
    CsvTable t({"n", "x", "value", "derivative", "log_value", "identity_residual"});
    for (int n = 0; n <= c.nmax; ++n) {
        for (double x : c.bessel_x) {
            const BesselValue b = besseli(n, x);
            const double ident = (n >= 1 && x > 0.0) ? identity_residuals(n, x).max_relative() : 0.0;
            const double logv = b.scaled.mantissa == 0.0 ? -INFINITY : b.scaled.log();
            t.row({std::to_string(n), fmt17(x), fmt17(b.value), fmt17(b.derivative), fmt17(logv), fmt17(ident)});
        }
    }
    write_text(c.out / "bessel_table.csv", t.str());
    out << "bessel_table.csv: " << t.rows() << " rows, n = 0.." << c.nmax << "\n";
    return kExitOk;
}

int cmd_expansion(const RunConfig& c, std::ostream& out) {
    const StationaryState s = c.base();
    const FbpSolver solver(SolverGrid(c.n_r, c.n_theta), s);
    CsvTable t({"n", "terms", "epsilon", "remainder", "used"});
    json summary = json::array();
    bool failed = false;
    for (int n : c.modes.empty() ? std::vector<int>{2} : c.modes) {
        const double mu = mu_n(s, n);
        for (ExpansionTerms terms : {ExpansionTerms::full, ExpansionTerms::drop_second, ExpansionTerms::drop_both}) {
            ExpansionOrderOptions opt;
            opt.terms = terms;
            opt.slope_tolerance = c.tolerance("slope");
            // drop_both runs at mu_n / 2
            opt.mu = terms == ExpansionTerms::drop_both ? 0.5 * mu : mu;
            const ExpansionOrderResult r = verify_expansion_order(solver, n, c.eps_ladder, opt);
            for (std::size_t i = 0; i < r.eps.size(); ++i) {
                t.row({std::to_string(n), terms_name(terms), fmt17(r.eps[i]), fmt17(r.remainder[i]),
                       r.used[i] ? "1" : "0"});
            }
            failed = failed || r.status == OrderStatus::fail;
            summary.push_back({{"n", n}, {"terms", terms_name(terms)}, {"mu", *opt.mu}, {"slope", r.slope},
                               {"expected", r.expected}, {"decades", r.decades}, {"status", to_string(r.status)}});
            out << "n=" << n << " " << terms_name(terms) << ": slope " << fmt17(r.slope) << " (expected "
                << r.expected << "), " << to_string(r.status) << "\n";
        }
    }
    write_text(c.out / "expansion.csv", t.str());
    write_text(c.out / "expansion.json", summary.dump(2) + "\n");
    return failed ? kExitFailure : kExitOk;
}

int cmd_bifpoints(const RunConfig& c, std::ostream& out) {
    const StationaryState s = c.base();
    CsvTable t({"n", "M_n", "M_tilde", "mu_n", "lambda1", "lambda2", "mu_prime_0", "verdict"});
    bool all = true;
    for (int n : c.mode_range()) {
        const BifurcationReport r = pitchfork_report(s, n, c.tolerance("pitchfork"));
        t.row({std::to_string(n), fmt17(r.m_n), fmt17(r.m_tilde), fmt17(r.mu_n), fmt17(r.lambda1), fmt17(r.lambda2),
               fmt17(r.mu_prime_0), to_string(r.verdict)});
        all = all && r.verdict == Verdict::pitchfork;
    }
    write_text(c.out / "bifpoints.csv", t.str());
    out << t.str();
    return all ? kExitOk : kExitFailure;
}

int cmd_branch(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const StationaryState s = c.base();
    const int n = c.single_mode();
    const FbpSolver solver(SolverGrid(c.n_r, c.n_theta), s);
    ContinuationOptions opt;
    opt.throw_on_collapse = false;
    opt.eps_start = std::min(0.02, 0.25 * c.eps_max);
    opt.initial_step = opt.eps_start;
    const ContinuationBranch b = continue_branch(solver, n, c.eps_max, opt);
    for (const std::string& line : b.log) err << line << "\n";

    CsvTable t({"n", "step", "mu", "epsilon", "residual_norm"});
    json points = json::array();
    for (std::size_t i = 0; i < b.points.size(); ++i) {
        const BranchPoint& p = b.points[i];
        t.row({std::to_string(n), std::to_string(i), fmt17(p.mu), fmt17(p.epsilon), fmt17(p.solution.residual_norm)});
        json coeffs = json::array();
        for (double v : p.solution.boundary.cos) coeffs.push_back(v);
        points.push_back({{"step", i}, {"mu", p.mu}, {"epsilon", p.epsilon}, {"cos", coeffs}});
    }
    write_text(c.out / "branch.csv", t.str());

    json j;
    j["geometry"] = geometry_json(c, s);
    j["n"] = n;
    j["grid"] = {{"n_r", c.n_r}, {"n_theta", c.n_theta}};
    j["mu_n"] = mu_n(s, n);
    j["complete"] = b.complete;
    j["log"] = b.log;
    bool fit_ok = false;
    try {
        const MuSecondEstimate e = estimate_mu_second(b);
        j["fit"] = {{"constant", e.constant},         {"linear", e.linear},
                    {"quadratic", e.quadratic},       {"mu_second", e.mu_second},
                    {"eps_max", e.eps_max},           {"pitchfork_consistent", e.pitchfork_consistent},
                    {"ill_conditioned", e.ill_conditioned}};
        fit_ok = e.pitchfork_consistent;
        out << "mu''(0) ~ " << fmt17(e.mu_second) << ", limit mu " << fmt17(e.constant) << " (mu_n "
            << fmt17(mu_n(s, n)) << "), linear coefficient " << fmt17(e.linear) << "\n";
    } catch (const DomainError& e) {
        j["fit"] = nullptr;
        err << "fit skipped: " << e.what() << "\n";
    }
    j["points"] = points;
    write_text(c.out / "branch.json", j.dump(2) + "\n");

    // contours of the two endpoints
    CsvTable contour({"endpoint", "theta", "rho"});
    std::vector<Contour> curves;
    const int samples = 256;
    if (!b.points.empty()) {
        const BranchPoint* ends[2] = {&b.points.front(), &b.points.back()};
        const char* colors[2] = {"#1f77b4", "#d62728"};
        for (int e = 0; e < 2; ++e) {
            Contour cv;
            char label[96];
            std::snprintf(label, sizeof label, "eps = %.4f, mu = %.6f", ends[e]->epsilon, ends[e]->mu);
            cv.label = label;
            cv.color = colors[e];
            const BoundaryShape& shape = ends[e]->solution.boundary;
            for (int k = 0; k < samples; ++k) {
                const double th = 2.0 * std::numbers::pi * k / samples;
                double rho = s.radius();
                for (int m = 0; m <= shape.highest_mode(); ++m) {
                    rho += shape.cos_coeff(m) * std::cos(m * th) + shape.sin_coeff(m) * std::sin(m * th);
                }
                cv.theta.push_back(th);
                cv.rho.push_back(rho);
                contour.row({e == 0 ? "min_epsilon" : "max_epsilon", fmt17(th), fmt17(rho)});
            }
            curves.push_back(cv);
        }
    }
    write_text(c.out / "branch_contour.csv", contour.str());
    write_text(c.out / "branch.svg", contour_svg(curves, s.radius()));
    out << "branch: " << b.points.size() << " points, eps in [" << fmt17(b.points.empty() ? 0.0 : b.points.front().epsilon)
        << ", " << fmt17(b.points.empty() ? 0.0 : b.points.back().epsilon) << "]" << (b.complete ? "" : " (incomplete)")
        << "\n";
    return b.complete && fit_ok ? kExitOk : kExitFailure;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    const std::vector<CheckResult> results = run_checks(c);
    const std::string report = format_report(results);
    write_text(c.out / "verify.txt", report);
    out << report;
    for (const CheckResult& r : results) {
        if (r.status == CheckStatus::fail) return kExitFailure;
    }
    return kExitOk;
}

}  // namespace fbp::cli
