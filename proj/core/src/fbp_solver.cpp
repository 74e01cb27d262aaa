#include "fbp/fbp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fbp/boundary_geometry.hpp"
#include "fbp/errors.hpp"

namespace fbp {

namespace {

constexpr double kLinearTolerance = 1e-11;
constexpr double kMinRcond = 1e-15;

}  // namespace

EllipticOperator::EllipticOperator(const SolverGrid& grid, const MappedDisk& disk, double shift)
    : grid_(&grid), disk_(&disk), shift_(shift), reduced_(disk.is_even()) {
    const Eigen::ArrayXXd r = disk.r.array();
    const Eigen::ArrayXXd rs = disk.r_s.array();
    const Eigen::ArrayXXd rss = disk.r_ss.array();
    const Eigen::ArrayXXd rp = disk.r_p.array();
    const Eigen::ArrayXXd rpp = disk.r_pp.array();
    const Eigen::ArrayXXd rsp = disk.r_sp.array();
    const Eigen::ArrayXXd q = rp / rs;
    const Eigen::ArrayXXd qs = (rsp * rs - rp * rss) / (rs * rs);
    const Eigen::ArrayXXd qp = (rpp * rs - rp * rsp) / (rs * rs);
    const Eigen::ArrayXXd r2 = r * r;
    a_ = (1.0 / (rs * rs) + q * q / r2).matrix();
    b_ = (-rss / (rs * rs * rs) + 1.0 / (r * rs) + (q * qs - qp) / r2).matrix();
    c_ = (1.0 / r2).matrix();
    e_ = (-2.0 * q / r2).matrix();
    assemble();
}

int EllipticOperator::angular_unknowns() const {
    return reduced_ ? grid_->n_theta() / 2 + 1 : grid_->n_theta();
}

// Column of (l, m); boundary nodes (l = 0) are encoded as -1 - m.
int EllipticOperator::column(int l, int m) const {
    const int nt = grid_->n_theta();
    const int mm = reduced_ ? std::min(m, nt - m) : m;
    return l == 0 ? -1 - mm : (l - 1) * angular_unknowns() + mm;
}

void EllipticOperator::assemble() {
    const SolverGrid& g = *grid_;
    const int nr = g.n_r();
    const int nt = g.n_theta();
    const int na = angular_unknowns();
    const int mlast = g.m();
    const Eigen::MatrixXd& d1 = g.cheb().d1;
    const Eigen::MatrixXd& d2 = g.cheb().d2;
    const Eigen::MatrixXd& f1 = g.four().d1;
    const Eigen::MatrixXd& f2 = g.four().d2;
    const int n = (nr - 1) * na;
    lhs_ = Eigen::MatrixXd::Zero(n, n);
    boundary_block_ = Eigen::MatrixXd::Zero(n, na);

    for (int i = 1; i < nr; ++i) {
        for (int j = 0; j < na; ++j) {
            const int row = (i - 1) * na + j;
            const auto add = [&](int l, int m, double v) {
                const int col = column(l, m);
                if (col < 0) {
                    boundary_block_(row, -1 - col) -= v;
                } else {
                    lhs_(row, col) -= v;
                }
            };
            const double a = a_(i, j);
            const double b = b_(i, j);
            const double c = c_(i, j);
            const double e = e_(i, j);
            const int jo = g.opposite(j);
            for (int l = 0; l < nr; ++l) {
                add(l, j, a * d2(i, l) + b * d1(i, l));
                add(l, jo, a * d2(i, mlast - l) + b * d1(i, mlast - l));
            }
            for (int m = 0; m < nt; ++m) {
                add(i, m, c * f2(j, m));
            }
            if (e != 0.0) {
                for (int l = 0; l < nr; ++l) {
                    for (int m = 0; m < nt; ++m) {
                        add(l, m, e * (f1(j, m) * d1(i, l) + f1(jo, m) * d1(i, mlast - l)));
                    }
                }
            }
            lhs_(row, row) += shift_;
        }
    }
    lu_.compute(lhs_);
    rcond_ = lu_.rcond();
    if (!(rcond_ > kMinRcond)) {
        throw LinearSolveError("EllipticOperator: collocation matrix is singular", rcond_ > 0.0 ? 1.0 / rcond_ : INFINITY);
    }
}

Eigen::MatrixXd EllipticOperator::solve(const Eigen::VectorXd& boundary, const Eigen::MatrixXd& source,
                                        double* relative_residual) const {
    const SolverGrid& g = *grid_;
    const int nr = g.n_r();
    const int nt = g.n_theta();
    const int na = angular_unknowns();
    if (boundary.size() != nt || source.rows() != nr || source.cols() != nt) {
        throw DomainError("EllipticOperator::solve: data does not match the grid");
    }
    Eigen::VectorXd rhs(lhs_.rows());
    for (int i = 1; i < nr; ++i) {
        for (int j = 0; j < na; ++j) {
            rhs((i - 1) * na + j) = source(i, j);
        }
    }
    rhs -= boundary_block_ * boundary.head(na);

    Eigen::VectorXd x = lu_.solve(rhs);
    const double scale_a = lhs_.cwiseAbs().rowwise().sum().maxCoeff();
    double rel = 0.0;
    for (int pass = 0; pass < 3; ++pass) {
        const Eigen::VectorXd res = rhs - lhs_ * x;
        rel = res.lpNorm<Eigen::Infinity>() /
              (scale_a * x.lpNorm<Eigen::Infinity>() + rhs.lpNorm<Eigen::Infinity>() + 1e-300);
        if (rel <= 1e-15) break;
        x += lu_.solve(res);
    }
    if (rel > kLinearTolerance) {
        throw LinearSolveError("EllipticOperator: residual " + std::to_string(rel) + " above tolerance",
                               1.0 / rcond_);
    }
    if (relative_residual != nullptr) {
        *relative_residual = rel;
    }

    Eigen::MatrixXd u(nr, nt);
    u.row(0) = boundary.transpose();
    for (int i = 1; i < nr; ++i) {
        for (int j = 0; j < nt; ++j) {
            u(i, j) = x(column(i, j));
        }
    }
    return u;
}

Eigen::MatrixXd EllipticOperator::laplacian(const Eigen::MatrixXd& u) const {
    const SolverGrid& g = *grid_;
    const Eigen::MatrixXd us = g.ds(u);
    return (a_.array() * g.dss(u).array() + b_.array() * us.array() + c_.array() * g.dtt(u).array() +
            e_.array() * g.dt(us).array())
        .matrix();
}

Eigen::MatrixXd EllipticOperator::apply(const Eigen::MatrixXd& u) const {
    Eigen::MatrixXd out = -laplacian(u) + shift_ * u;
    out.row(0).setZero();
    return out;
}

FCoefficients FSplit::at(double mu) const {
    return {tilde.cos + mu * star.cos, tilde.sin + mu * star.sin};
}

FCoefficients project_boundary(const SolverGrid& grid, const Eigen::VectorXd& values) {
    const int nt = grid.n_theta();
    const int k_top = nt / 2;
    FCoefficients out{Eigen::VectorXd::Zero(k_top + 1), Eigen::VectorXd::Zero(k_top + 1)};
    for (int k = 0; k <= k_top; ++k) {
        double c = 0.0;
        double s = 0.0;
        for (int j = 0; j < nt; ++j) {
            // exact integer reduction keeps k theta_j on the grid
            const double t = 2.0 * std::numbers::pi * ((static_cast<long>(k) * j) % nt) / nt;
            c += values(j) * std::cos(t);
            s += values(j) * std::sin(t);
        }
        const double w = (k == 0 || k == k_top) ? 1.0 / nt : 2.0 / nt;
        out.cos(k) = w * c;
        out.sin(k) = (k == 0 || k == k_top) ? 0.0 : w * s;
    }
    return out;
}

FbpSolver::FbpSolver(SolverGrid grid, StationaryState base) : grid_(std::move(grid)), base_(base) {}

FieldSolution FbpSolver::solve_fields(const BoundaryShape& boundary) const {
    for (double v : boundary.cos) {
        if (!std::isfinite(v)) throw DomainError("solve_fields: non-finite boundary coefficient");
    }
    for (double v : boundary.sin) {
        if (!std::isfinite(v)) throw DomainError("solve_fields: non-finite boundary coefficient");
    }
    const int nr = grid_.n_r();
    const int nt = grid_.n_theta();
    const double R = base_.radius();
    const MappedDisk disk(grid_, R, boundary);
    const PolarCurve curve(R, 1.0, boundary.cos, boundary.sin);

    Eigen::VectorXd kappa(nt);
    for (int j = 0; j < nt; ++j) {
        kappa(j) = curvature_exact(curve, grid_.theta(j));
    }
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(nr, nt);

    FieldSolution out;
    out.boundary = boundary;
    out.r = disk.r;
    double res[3] = {0.0, 0.0, 0.0};
    const EllipticOperator helmholtz(grid_, disk, 1.0);
    out.sigma = helmholtz.solve(Eigen::VectorXd::Ones(nt), zero, &res[0]);
    const EllipticOperator laplace(grid_, disk, 0.0);
    out.p_tilde = laplace.solve(kappa, zero, &res[1]);
    const Eigen::MatrixXd source = out.sigma.array() - base_.sigma_tilde();
    out.p_star = laplace.solve(Eigen::VectorXd::Zero(nt), source, &res[2]);
    out.linear_residual = std::max({res[0], res[1], res[2]});
    return out;
}

BoundaryFlux FbpSolver::normal_flux(const FieldSolution& fields) const {
    const MappedDisk disk(grid_, base_.radius(), fields.boundary);
    const int nt = grid_.n_theta();
    const auto flux = [&](const Eigen::MatrixXd& u) {
        const Eigen::VectorXd us = grid_.ds(u).row(0).transpose();
        const Eigen::VectorXd up = grid_.four().d1 * u.row(0).transpose();
        Eigen::VectorXd dn(nt);
        for (int j = 0; j < nt; ++j) {
            const double rs = disk.r_s(0, j);
            const double rho = disk.rho(j);
            const double rho_t = disk.rho_t(j);
            const double u_r = us(j) / rs;
            const double u_t = up(j) - rho_t / rs * us(j);
            const double slope = rho_t / rho;
            dn(j) = (u_r - rho_t / (rho * rho) * u_t) / std::sqrt(1.0 + slope * slope);
        }
        return dn;
    };
    return {flux(fields.p_tilde), flux(fields.p_star)};
}

FSplit FbpSolver::evaluate_F_split(const BoundaryShape& boundary) const {
    const BoundaryFlux f = normal_flux(solve_fields(boundary));
    return {project_boundary(grid_, f.p_tilde), project_boundary(grid_, f.p_star)};
}

FCoefficients FbpSolver::evaluate_F(double mu, const BoundaryShape& boundary) const {
    return evaluate_F_split(boundary).at(mu);
}

Eigen::VectorXd FbpSolver::evaluate_F_nodal(double mu, const BoundaryShape& boundary) const {
    const BoundaryFlux f = normal_flux(solve_fields(boundary));
    return f.p_tilde + mu * f.p_star;
}

FieldSolution solve_fields(const SolverGrid& grid, const StationaryState& base, const BoundaryShape& boundary) {
    return FbpSolver(grid, base).solve_fields(boundary);
}

FCoefficients evaluate_F(const SolverGrid& grid, const StationaryState& base, double mu, const BoundaryShape& boundary) {
    return FbpSolver(grid, base).evaluate_F(mu, boundary);
}

}  // namespace fbp
