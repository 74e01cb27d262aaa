#include "fbp/mapped_disk.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fbp/errors.hpp"

namespace fbp {

BoundaryShape BoundaryShape::mode(int n, double eps) {
    if (n < 0) {
        throw DomainError("BoundaryShape::mode: n must be >= 0");
    }
    BoundaryShape b;
    b.cos.assign(static_cast<std::size_t>(n) + 1, 0.0);
    b.cos[static_cast<std::size_t>(n)] = eps;
    return b;
}

bool BoundaryShape::is_even() const {
    return std::all_of(sin.begin(), sin.end(), [](double v) { return v == 0.0; });
}

double BoundaryShape::cos_coeff(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < cos.size() ? cos[static_cast<std::size_t>(k)] : 0.0;
}

double BoundaryShape::sin_coeff(int k) const {
    return k >= 0 && static_cast<std::size_t>(k) < sin.size() ? sin[static_cast<std::size_t>(k)] : 0.0;
}

int BoundaryShape::highest_mode() const {
    int top = -1;
    for (std::size_t k = 0; k < cos.size(); ++k) {
        if (cos[k] != 0.0) top = static_cast<int>(k);
    }
    for (std::size_t k = 0; k < sin.size(); ++k) {
        if (sin[k] != 0.0) top = std::max(top, static_cast<int>(k));
    }
    return top;
}

MappedDisk::MappedDisk(const SolverGrid& grid, double base_radius, BoundaryShape shape)
    : base_radius_(base_radius), shape_(std::move(shape)) {
    const int nr = grid.n_r();
    const int nt = grid.n_theta();
    if (!(base_radius > 0.0)) {
        throw DomainError("MappedDisk: base radius must be positive");
    }
    if (shape_.highest_mode() > nt / 2) {
        throw DomainError("MappedDisk: boundary mode " + std::to_string(shape_.highest_mode()) +
                          " is not resolved by N_theta = " + std::to_string(nt));
    }
    const int top = std::max(shape_.highest_mode(), 0);
    r.resize(nr, nt);
    r_s.resize(nr, nt);
    r_ss.resize(nr, nt);
    r_p.resize(nr, nt);
    r_pp.resize(nr, nt);
    r_sp.resize(nr, nt);
    for (int j = 0; j < nt; ++j) {
        const double t = grid.theta(j);
        std::vector<double> h(static_cast<std::size_t>(top) + 1);
        std::vector<double> hp(h.size());
        std::vector<double> hpp(h.size());
        for (int k = 0; k <= top; ++k) {
            const double c = std::cos(k * t);
            const double sn = std::sin(k * t);
            const double a = shape_.cos_coeff(k);
            const double b = shape_.sin_coeff(k);
            h[static_cast<std::size_t>(k)] = a * c + b * sn;
            hp[static_cast<std::size_t>(k)] = k * (-a * sn + b * c);
            hpp[static_cast<std::size_t>(k)] = -static_cast<double>(k) * k * (a * c + b * sn);
        }
        for (int i = 0; i < nr; ++i) {
            const double s = grid.s(i);
            double g = base_radius;
            double rs = base_radius;
            double rss = 0.0;
            double rp = 0.0;
            double rpp = 0.0;
            double rsp = 0.0;
            double sk = 1.0;  // s^k
            for (int k = 0; k <= top; ++k) {
                const auto kk = static_cast<std::size_t>(k);
                g += sk * h[kk];
                rs += (k + 1) * sk * h[kk];
                if (k >= 1) rss += k * (k + 1) * (sk / s) * h[kk];
                rp += s * sk * hp[kk];
                rpp += s * sk * hpp[kk];
                rsp += (k + 1) * sk * hp[kk];
                sk *= s;
            }
            r(i, j) = s * g;
            r_s(i, j) = rs;
            r_ss(i, j) = rss;
            r_p(i, j) = rp;
            r_pp(i, j) = rpp;
            r_sp(i, j) = rsp;
        }
    }
    rho = r.row(0).transpose();
    rho_t = r_p.row(0).transpose();
    rho_tt = r_pp.row(0).transpose();

    const double center_rs = base_radius + shape_.cos_coeff(0);
    const double min_r = r.minCoeff();
    const double min_rs = std::min(r_s.minCoeff(), center_rs);
    if (!(min_r > 0.0) || !(min_rs > 0.0)) {
        throw DegenerateDomainError("MappedDisk: degenerate boundary mapping (min r = " + std::to_string(min_r) +
                                    ", min dr/ds = " + std::to_string(min_rs) + ")");
    }
}

}  // namespace fbp
