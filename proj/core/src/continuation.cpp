#include "fbp/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fbp/bifurcation.hpp"
#include "fbp/errors.hpp"
#include "fbp/mode_perturbation.hpp"

namespace fbp {

namespace {

// Layout of the unknown vector y: cos modes {0, 2, ..., K-1} of the boundary, then mu.
class Layout {
public:
    explicit Layout(const SolverGrid& grid) : top_(grid.n_theta() / 2) {
        modes_.push_back(0);
        for (int k = 2; k < top_; ++k) modes_.push_back(k);
    }

    [[nodiscard]] int size() const { return static_cast<int>(modes_.size()) + 1; }
    [[nodiscard]] int mu_index() const { return static_cast<int>(modes_.size()); }
    [[nodiscard]] const std::vector<int>& modes() const { return modes_; }

    [[nodiscard]] int index_of(int mode) const {
        const auto it = std::find(modes_.begin(), modes_.end(), mode);
        if (it == modes_.end()) {
            throw DomainError("mode " + std::to_string(mode) + " is not a free boundary mode on this grid");
        }
        return static_cast<int>(it - modes_.begin());
    }

    [[nodiscard]] BoundaryShape shape(const Eigen::VectorXd& y) const {
        BoundaryShape b;
        b.cos.assign(static_cast<std::size_t>(top_), 0.0);
        for (std::size_t p = 0; p < modes_.size(); ++p) {
            b.cos[static_cast<std::size_t>(modes_[p])] = y(static_cast<int>(p));
        }
        return b;
    }

    [[nodiscard]] Eigen::VectorXd restrict(const Eigen::VectorXd& coeffs) const {
        Eigen::VectorXd out(modes_.size());
        for (std::size_t p = 0; p < modes_.size(); ++p) out(static_cast<int>(p)) = coeffs(modes_[p]);
        return out;
    }

private:
    int top_;
    std::vector<int> modes_;
};

struct Evaluation {
    FieldSolution fields;
    FSplit split;
};

Evaluation evaluate(const FbpSolver& solver, const BoundaryShape& shape) {
    Evaluation ev;
    ev.fields = solver.solve_fields(shape);
    const BoundaryFlux f = solver.normal_flux(ev.fields);
    ev.split = {project_boundary(solver.grid(), f.p_tilde), project_boundary(solver.grid(), f.p_star)};
    return ev;
}

struct Corrected {
    Eigen::VectorXd y;
    Evaluation eval;
    double residual = INFINITY;
    int iterations = 0;
    bool converged = false;
};

// Augmented Jacobian: forward differences in the modes, F* in the mu column, c in the last row.
Eigen::MatrixXd jacobian(const FbpSolver& solver, const Layout& layout, const Eigen::VectorXd& y,
                         const Evaluation& ev, const Eigen::VectorXd& f, const Eigen::VectorXd& c,
                         const NewtonOptions& opt) {
    const int m = layout.size();
    const int mu = layout.mu_index();
    Eigen::MatrixXd jac(m, m);
    for (int p = 0; p < mu; ++p) {
        const double h = opt.fd_step * std::max(1.0, std::abs(y(p)));
        Eigen::VectorXd yp = y;
        yp(p) += h;
        const FSplit sp = evaluate(solver, layout.shape(yp)).split;
        jac.col(p).head(m - 1) = (layout.restrict(sp.tilde.cos + y(mu) * sp.star.cos) - f) / h;
    }
    jac.col(mu).head(m - 1) = layout.restrict(ev.split.star.cos);
    jac.row(m - 1) = c.transpose();
    return jac;
}

Eigen::PartialPivLU<Eigen::MatrixXd> factor(const Eigen::MatrixXd& jac) {
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(jac);
    const double rc = lu.rcond();
    if (!(rc > 1e-13)) {
        throw SingularJacobianError("Newton Jacobian is singular (rcond " + std::to_string(rc) + ")");
    }
    return lu;
}

// Newton on {F restricted to the free modes = 0, c . y = d}.
Corrected correct(const FbpSolver& solver, const Layout& layout, Eigen::VectorXd y, const Eigen::VectorXd& c,
                  double d, const NewtonOptions& opt, int max_iterations) {
    const int m = layout.size();
    const int mu = layout.mu_index();
    Corrected best;
    for (int it = 0; it <= max_iterations; ++it) {
        Evaluation ev = evaluate(solver, layout.shape(y));
        const Eigen::VectorXd f = layout.restrict(ev.split.tilde.cos + y(mu) * ev.split.star.cos);
        Eigen::VectorXd g(m);
        g.head(m - 1) = f;
        g(m - 1) = c.dot(y) - d;
        const double res = g.lpNorm<Eigen::Infinity>();
        if (res < best.residual) {
            best.y = y;
            best.eval = ev;
            best.residual = res;
            best.iterations = it;
        }
        if (res <= opt.tolerance) {
            best.converged = true;
            return best;
        }
        if (it == max_iterations) break;

        const Eigen::PartialPivLU<Eigen::MatrixXd> lu = factor(jacobian(solver, layout, y, ev, f, c, opt));
        y -= lu.solve(g);
    }
    return best;
}

DiscreteSolution to_solution(const Layout& layout, const Corrected& c) {
    DiscreteSolution s;
    s.mu = c.y(layout.mu_index());
    s.boundary = layout.shape(c.y);
    const FCoefficients f = c.eval.split.at(s.mu);
    s.residual_norm = layout.restrict(f.cos).lpNorm<Eigen::Infinity>();
    s.pinned_mode_residual = std::abs(f.cos(1));
    s.iterations = c.iterations;
    s.fields = c.eval.fields;
    return s;
}

}  // namespace

NewtonResult newton_branch_point(const FbpSolver& solver, int n, double eps, double mu_guess,
                                 const NewtonOptions& options) {
    const Layout layout(solver.grid());
    const int pos = layout.index_of(n);
    if (n < 2) {
        throw DomainError("newton_branch_point: n must be >= 2");
    }
    if (eps == 0.0 && options.allow_trivial) {
        NewtonResult out;
        out.solution.mu = mu_guess;
        out.solution.boundary = BoundaryShape::zero();
        out.solution.fields = solver.solve_fields(out.solution.boundary);
        const FCoefficients f = solver.evaluate_F(mu_guess, out.solution.boundary);
        out.solution.residual_norm = f.cos.lpNorm<Eigen::Infinity>();
        out.solution.trivial_branch = true;
        out.converged = true;
        return out;
    }
    Eigen::VectorXd y = Eigen::VectorXd::Zero(layout.size());
    y(pos) = eps;
    y(layout.mu_index()) = mu_guess;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(layout.size());
    c(pos) = 1.0;
    if (eps == 0.0) {
        const Evaluation ev = evaluate(solver, layout.shape(y));
        const Eigen::VectorXd f = layout.restrict(ev.split.at(mu_guess).cos);
        (void)factor(jacobian(solver, layout, y, ev, f, c, options));
    }
    const Corrected r = correct(solver, layout, y, c, eps, options, options.max_iterations);
    return {to_solution(layout, r), r.converged};
}

ContinuationBranch continue_branch(const FbpSolver& solver, int n, double eps_max, const ContinuationOptions& opt) {
    if (!(eps_max > 0.0) || !(opt.eps_start > 0.0) || opt.eps_start >= eps_max) {
        throw DomainError("continue_branch: need 0 < eps_start < eps_max");
    }
    const Layout layout(solver.grid());
    const int pos = layout.index_of(n);
    const int mu = layout.mu_index();
    ContinuationBranch branch;
    branch.n = n;
    branch.mu_guess = mu_n(solver.base(), n);

    const auto to_vector = [&](const DiscreteSolution& s) {
        Eigen::VectorXd y(layout.size());
        for (std::size_t p = 0; p < layout.modes().size(); ++p) {
            y(static_cast<int>(p)) = s.boundary.cos_coeff(layout.modes()[p]);
        }
        y(mu) = s.mu;
        return y;
    };

    std::vector<BranchPoint> halves[2];
    std::vector<double> steps[2];
    for (int side = 0; side < 2; ++side) {
        const double sign = side == 0 ? -1.0 : 1.0;
        std::vector<Eigen::VectorXd> ys;
        std::vector<BranchPoint>& pts = halves[side];
        double mu_guess = branch.mu_guess;
        for (double e : {opt.eps_start, 2.0 * opt.eps_start}) {
            const NewtonResult r = newton_branch_point(solver, n, sign * e, mu_guess, opt.newton);
            if (!r.converged) {
                throw ConvergenceError("continue_branch: Newton failed at eps = " + std::to_string(sign * e));
            }
            mu_guess = r.solution.mu;
            pts.push_back({r.solution.mu, sign * e, r.solution});
            ys.push_back(to_vector(r.solution));
        }
        double ds = opt.initial_step;
        while (std::abs(ys.back()(pos)) < eps_max && static_cast<int>(pts.size()) < opt.max_points) {
            const Eigen::VectorXd& y1 = ys[ys.size() - 1];
            const Eigen::VectorXd& y0 = ys[ys.size() - 2];
            const Eigen::VectorXd t = (y1 - y0).normalized();
            Corrected c;
            bool ok = false;
            try {
                c = correct(solver, layout, y1 + ds * t, t, t.dot(y1) + ds, opt.newton, opt.corrector_iterations);
                ok = c.converged;
            } catch (const DegenerateDomainError&) {
            } catch (const LinearSolveError&) {
            } catch (const SingularJacobianError&) {
            }
            if (!ok) {
                ds *= 0.5;
                branch.log.push_back("eps sign " + std::to_string(static_cast<int>(sign)) +
                                     ": corrector failed, step halved to " + std::to_string(ds));
                if (ds < opt.min_step) {
                    const std::string msg = "continue_branch: arclength step fell below " + std::to_string(opt.min_step);
                    if (opt.throw_on_collapse) throw StepCollapseError(msg);
                    branch.log.push_back(msg);
                    branch.complete = false;
                    break;
                }
                continue;
            }
            if (std::abs(c.y(pos)) > eps_max) {
                // land on eps_max exactly
                const double w = (sign * eps_max - y1(pos)) / (c.y(pos) - y1(pos));
                Eigen::VectorXd amplitude = Eigen::VectorXd::Zero(layout.size());
                amplitude(pos) = 1.0;
                const Corrected last = correct(solver, layout, y1 + w * (c.y - y1), amplitude, sign * eps_max,
                                               opt.newton, opt.newton.max_iterations);
                if (last.converged) c = last;
            }
            const DiscreteSolution s = to_solution(layout, c);
            pts.push_back({s.mu, c.y(pos), s});
            ys.push_back(c.y);
            steps[side].push_back(ds);
            if (c.iterations <= 3) ds = std::min(1.5 * ds, opt.max_step);
        }
    }

    std::reverse(halves[0].begin(), halves[0].end());
    branch.points = std::move(halves[0]);
    branch.points.insert(branch.points.end(), halves[1].begin(), halves[1].end());
    branch.steps = steps[0];
    branch.steps.insert(branch.steps.end(), steps[1].begin(), steps[1].end());
    double total = 0.0;
    for (std::size_t i = 0; i < branch.points.size(); ++i) {
        if (i > 0) {
            total += (to_vector(branch.points[i].solution) - to_vector(branch.points[i - 1].solution)).norm();
        }
        branch.arclength.push_back(total);
    }
    return branch;
}

std::string to_string(OrderStatus s) {
    switch (s) {
        case OrderStatus::ok: return "ok";
        case OrderStatus::floor_warning: return "floor_warning";
        case OrderStatus::fail: return "fail";
    }
    return "fail";
}

ExpansionOrderResult verify_expansion_order(const FbpSolver& solver, int n, std::vector<double> eps,
                                            const ExpansionOrderOptions& options) {
    if (eps.size() < 2) {
        throw DomainError("verify_expansion_order: need at least two eps values");
    }
    for (double e : eps) {
        if (!(e > 0.0)) throw DomainError("verify_expansion_order: eps values must be positive");
    }
    std::sort(eps.begin(), eps.end(), std::greater<>());
    const StationaryState& base = solver.base();
    const double mu = options.mu.value_or(mu_n(base, n));
    const double f1 = frechet_first_coefficient(base, mu, n);
    const LambdaPair lam = frechet_second_grouped(base, n, mu, m_tilde(base, n));
    const bool keep_first = options.terms != ExpansionTerms::drop_both;
    const bool keep_second = options.terms == ExpansionTerms::full;

    ExpansionOrderResult out;
    out.expected = keep_second ? 3.0 : (keep_first ? 2.0 : 1.0);
    out.eps = eps;
    const SolverGrid& grid = solver.grid();
    for (double e : eps) {
        const Eigen::VectorXd f = solver.evaluate_F_nodal(mu, BoundaryShape::mode(n, e));
        double worst = 0.0;
        for (int j = 0; j < grid.n_theta(); ++j) {
            const double t = grid.theta(j);
            double model = 0.0;
            if (keep_first) model += e * f1 * std::cos(n * t);
            if (keep_second) model += 0.5 * e * e * (lam.lambda1 + lam.lambda2 * std::cos(2.0 * n * t));
            worst = std::max(worst, std::abs(f(j) - model));
        }
        out.remainder.push_back(worst);
    }
    out.used.assign(eps.size(), true);
    for (std::size_t i = 1; i < eps.size(); ++i) {
        const double local = std::log(out.remainder[i - 1] / out.remainder[i]) / std::log(eps[i - 1] / eps[i]);
        if (!(local >= out.expected - 0.5)) {
            out.floor_reached = true;
            std::fill(out.used.begin() + static_cast<long>(i), out.used.end(), false);
            break;
        }
    }
    std::vector<double> lx;
    std::vector<double> ly;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        if (!out.used[i]) continue;
        lx.push_back(std::log(eps[i]));
        ly.push_back(std::log(out.remainder[i]));
    }
    if (lx.size() < 2) {
        out.slope = NAN;
        out.status = OrderStatus::floor_warning;
        return out;
    }
    const double k = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    out.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    out.decades = (lx.front() - lx.back()) / std::numbers::ln10;
    const bool slope_ok = std::abs(out.slope - out.expected) <= options.slope_tolerance;
    if (out.floor_reached && out.decades < 2.0) {
        out.status = OrderStatus::floor_warning;
    } else {
        out.status = slope_ok ? OrderStatus::ok : OrderStatus::fail;
    }
    return out;
}

MuSecondEstimate estimate_mu_second(const std::vector<double>& eps, const std::vector<double>& mu,
                                    double solver_noise) {
    if (eps.size() != mu.size() || eps.size() < 7) {
        throw DomainError("estimate_mu_second: need at least 7 (eps, mu) pairs");
    }
    const bool has_neg = std::any_of(eps.begin(), eps.end(), [](double e) { return e < 0.0; });
    const bool has_pos = std::any_of(eps.begin(), eps.end(), [](double e) { return e > 0.0; });
    if (!has_neg || !has_pos) {
        throw DomainError("estimate_mu_second: eps must take both signs");
    }
    const auto rows = static_cast<Eigen::Index>(eps.size());
    Eigen::MatrixXd a(rows, 3);
    Eigen::VectorXd b(rows);
    double lo = eps[0];
    double hi = eps[0];
    MuSecondEstimate out;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double e = eps[static_cast<std::size_t>(i)];
        a(i, 0) = 1.0;
        a(i, 1) = e;
        a(i, 2) = e * e;
        b(i) = mu[static_cast<std::size_t>(i)];
        lo = std::min(lo, e);
        hi = std::max(hi, e);
        out.eps_max = std::max(out.eps_max, std::abs(e));
    }
    const Eigen::Vector3d x = a.colPivHouseholderQr().solve(b);
    out.constant = x(0);
    out.linear = x(1);
    out.quadratic = x(2);
    out.mu_second = 2.0 * x(2);
    out.pitchfork_consistent = std::abs(out.linear) <= 1e-3 * std::abs(out.quadratic) * out.eps_max;
    out.ill_conditioned = (hi - lo) < 10.0 * solver_noise;
    return out;
}

MuSecondEstimate estimate_mu_second(const ContinuationBranch& branch) {
    std::vector<double> eps;
    std::vector<double> mu;
    double noise = 0.0;
    for (const BranchPoint& p : branch.points) {
        eps.push_back(p.epsilon);
        mu.push_back(p.mu);
        noise = std::max(noise, p.solution.residual_norm);
    }
    return estimate_mu_second(eps, mu, noise);
}

}  // namespace fbp
