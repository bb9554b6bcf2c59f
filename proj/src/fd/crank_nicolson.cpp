#include "halfline/fd/crank_nicolson.hpp"

#include <cmath>

namespace halfline::fd {

namespace {

// Complex tridiagonal Thomas solve; diag/lower/upper copied per call.
void thomas(std::vector<cplx> lower, std::vector<cplx> diag, std::vector<cplx> upper,
            std::vector<cplx>& rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const cplx m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
}

struct Stencil {
    // (L u)_j = second-difference Laplacian rows including the Robin ghost
    // closure at j = 0; affine boundary term enters separately as
    // b0(t) = -2 h(t) / (alpha dx) in row 0.
    double inv_dx2;
    double alpha;
    double dx;
    std::size_t m;  // unknowns u_0 .. u_{m-1}, Dirichlet u_m = 0

    void apply(const std::vector<cplx>& u, std::vector<cplx>& out) const {
        out[0] = ((-2.0 + 2.0 * dx / alpha) * u[0] + 2.0 * u[1]) * inv_dx2;
        for (std::size_t j = 1; j + 1 < m; ++j)
            out[j] = (u[j - 1] - 2.0 * u[j] + u[j + 1]) * inv_dx2;
        out[m - 1] = (u[m - 2] - 2.0 * u[m - 1]) * inv_dx2;
    }
};

cplx pointwise_f(const cplx& v, const ModelParams& p) {
    if (p.lambda == cplx(0.0, 0.0)) return cplx(0.0, 0.0);
    if (p.p == 3.0) return p.lambda * std::norm(v) * v;
    const double m = std::abs(v);
    return m > 0.0 ? p.lambda * std::pow(m, p.p - 1.0) * v : cplx(0.0, 0.0);
}

}  // namespace

Trajectory crank_nicolson_robin(const FDConfig& cfg, double T) {
    cfg.validate();
    const Grid& g = *cfg.grid;
    const std::size_t n = g.size();
    const std::size_t m = n + 1;  // unknowns at x = 0, dx, ..., n dx
    const double dx = g.dx();
    const double dt = cfg.dt;
    const double theta = cfg.theta;
    const double alpha = cfg.params.alpha;

    const Stencil L{1.0 / (dx * dx), alpha, dx, m};
    const cplx idt(0.0, 1.0 / dt);

    // A+ = (i/dt) I + (theta/2) L (constant; nonlinear source sits on the RHS)
    std::vector<cplx> lower(m), diag(m), upper(m);
    for (std::size_t j = 0; j < m; ++j) {
        lower[j] = (j == 0) ? cplx(0.0, 0.0) : cplx(0.5 * theta * L.inv_dx2, 0.0);
        upper[j] = (j + 1 == m) ? cplx(0.0, 0.0)
                                : cplx(0.5 * theta * L.inv_dx2 * (j == 0 ? 2.0 : 1.0), 0.0);
        const double d0 = (j == 0) ? (-2.0 + 2.0 * dx / alpha) : -2.0;
        diag[j] = idt + 0.5 * theta * d0 * L.inv_dx2;
    }

    // initial datum: u0 on the interior, extrapolated to the wall (the
    // compatibility assumption u0(0) = 0 makes this a small correction)
    std::vector<cplx> u(m, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) u[j + 1] = cfg.params.u0[j];
    {
        ComplexField tmp(cfg.params.u0);
        u[0] = wall_value(tmp);
    }

    Trajectory traj;
    traj.dt = dt;
    traj.solver = "crank-nicolson";
    auto store = [&](double t) {
        Snapshot s;
        s.t = t;
        s.u = ComplexField(cfg.grid, Rep::physical, t);
        for (std::size_t j = 0; j < n; ++j) s.u[j] = u[j + 1];
        s.has_split = false;
        traj.note_tail(s.u);
        traj.snapshots.push_back(std::move(s));
    };
    store(0.0);

    const std::size_t n_steps = static_cast<std::size_t>(std::llround(T / dt));
    std::vector<cplx> Lu(m), rhs(m), u_star(m);

    auto b0 = [&](double t) { return -2.0 * cfg.boundary.h(t) / (alpha * dx); };

    auto assemble_rhs = [&](double t_new, const std::vector<cplx>& f_mid) {
        L.apply(u, Lu);
        const double t_old = t_new - dt;
        const cplx bc = 0.5 * (theta * b0(t_new) + (1.0 - theta) * b0(t_old));
        for (std::size_t j = 0; j < m; ++j)
            rhs[j] = idt * u[j] - 0.5 * (1.0 - theta) * Lu[j] + f_mid[j];
        rhs[0] -= bc;
    };

    std::vector<cplx> f_mid(m, cplx(0.0, 0.0));
    const bool linear = cfg.params.lambda == cplx(0.0, 0.0);

    for (std::size_t i = 0; i < n_steps; ++i) {
        const double t_new = (i + 1) * dt;
        if (linear) {
            assemble_rhs(t_new, f_mid);
            thomas(lower, diag, upper, rhs);
            u = rhs;
        } else {
            // predictor with the old-time source, one corrector at the midpoint
            for (std::size_t j = 0; j < m; ++j) f_mid[j] = pointwise_f(u[j], cfg.params);
            assemble_rhs(t_new, f_mid);
            u_star = rhs;
            thomas(lower, diag, upper, u_star);
            for (std::size_t j = 0; j < m; ++j)
                f_mid[j] = pointwise_f(0.5 * (u[j] + u_star[j]), cfg.params);
            assemble_rhs(t_new, f_mid);
            thomas(lower, diag, upper, rhs);
            u = rhs;
        }
        if ((i + 1) % cfg.snapshot_stride == 0 || i + 1 == n_steps) store(t_new);
    }
    return traj;
}

std::vector<double> robin_residual(const Trajectory& traj, const BoundaryData& h, double alpha) {
    std::vector<double> out;
    out.reserve(traj.snapshots.size());
    for (const auto& s : traj.snapshots) {
        if (s.u.size() < 6) throw UsageError("robin_residual: need at least 6 interior nodes");
        const auto [u0, du0] = wall_value_and_slope(s.u);
        out.push_back(std::abs(u0 + alpha * du0 - h.h(s.t)));
    }
    return out;
}

}  // namespace halfline::fd
