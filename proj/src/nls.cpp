#include "halfline/nls.hpp"

#include <cmath>
#include <cstdio>

#include "halfline/transforms.hpp"

namespace halfline {

namespace {

struct StepTables {
    std::vector<cplx> E_dt;    // e^{-i p^2 dt/2}
    std::vector<cplx> E_half;  // e^{-i p^2 dt/4}
};

StepTables make_tables(const RobinPropagator& prop, double dt) {
    return {prop.free_phase(dt), prop.free_phase(0.5 * dt)};
}

// w_hat <- E_dt w_hat - i dt E_half src_hat
void march_hat(std::vector<cplx>& w_hat, const StepTables& tb, const std::vector<cplx>& src_hat,
               double dt) {
    const cplx mi_dt(0.0, -dt);
    for (std::size_t k = 0; k < w_hat.size(); ++k)
        w_hat[k] = tb.E_dt[k] * w_hat[k] + mi_dt * tb.E_half[k] * src_hat[k];
}

void free_march_hat(std::vector<cplx>& w_hat, const StepTables& tb) {
    for (std::size_t k = 0; k < w_hat.size(); ++k) w_hat[k] *= tb.E_dt[k];
}

ComplexField field_average(const ComplexField& a, const ComplexField& b) {
    ComplexField out = a;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = 0.5 * (a[j] + b[j]);
    return out;
}

}  // namespace

Trajectory duhamel_solve_w(const ModelParams& params,
                           const std::function<ComplexField(double)>& f_source,
                           const SolveOptions& opt) {
    params.validate();
    if (!(opt.dt > 0.0) || !(opt.T > 0.0)) throw ConfigError("duhamel_solve_w: T, dt must be > 0");

    GridPtr g = params.u0.grid_ptr();
    RobinPropagator prop(g, params.alpha);
    const StepTables tb = make_tables(prop, opt.dt);

    std::vector<cplx> w_hat = prop.hat_of_B(params.u0);
    const std::size_t n_steps = static_cast<std::size_t>(std::llround(opt.T / opt.dt));

    Trajectory traj;
    traj.dt = opt.dt;
    traj.solver = "duhamel-w";
    auto store = [&](double t, const std::vector<cplx>& hat) {
        Snapshot s;
        s.t = t;
        s.u = prop.hat_to_physical(hat, t);
        s.w = s.u;
        s.z = ComplexField(g, Rep::physical, t);
        s.has_split = true;
        traj.note_tail(s.u);
        traj.snapshots.push_back(std::move(s));
    };
    store(0.0, w_hat);

    for (std::size_t i = 0; i < n_steps; ++i) {
        const double t_mid = (static_cast<double>(i) + 0.5) * opt.dt;
        if (f_source) {
            ComplexField f_mid = f_source(t_mid);
            march_hat(w_hat, tb, prop.hat_of_B(f_mid), opt.dt);
        } else {
            free_march_hat(w_hat, tb);
        }
        if ((i + 1) % opt.snapshot_stride == 0 || i + 1 == n_steps)
            store((i + 1) * opt.dt, w_hat);
    }
    return traj;
}

Trajectory solve_stepped(const ModelParams& params, const BoundaryData& h,
                         const SolveOptions& opt) {
    params.validate();
    if (!(opt.dt > 0.0) || !(opt.T > 0.0)) throw ConfigError("solve_stepped: T, dt must be > 0");

    GridPtr g = params.u0.grid_ptr();
    RobinPropagator prop(g, params.alpha);
    const StepTables tb = make_tables(prop, opt.dt);
    const bool linear = params.lambda == cplx(0.0, 0.0);

    std::vector<cplx> w_hat = prop.hat_of_B(params.u0);
    BoundaryHatState z_state(g, h);

    Trajectory traj;
    traj.dt = opt.dt;
    traj.solver = "stepped-duhamel";

    OperatorParams op(params.alpha);
    auto assemble = [&](double t, const std::vector<cplx>& what,
                        const std::vector<cplx>& zhat) {
        std::vector<cplx> total(what.size());
        for (std::size_t k = 0; k < total.size(); ++k) total[k] = what[k] + zhat[k];
        return synthesize_with_boundary_lift(g, total, h.h(t), op, t);
    };
    auto store = [&](double t) {
        Snapshot s;
        s.t = t;
        s.w = prop.hat_to_physical(w_hat, t);
        s.z = synthesize_with_boundary_lift(g, z_state.hat(), h.h(t), op, t);
        s.u = assemble(t, w_hat, z_state.hat());
        s.has_split = true;
        traj.note_tail(s.u);
        traj.snapshots.push_back(std::move(s));
    };

    ComplexField u_now = assemble(0.0, w_hat, z_state.hat());
    ComplexField u_prev = u_now;
    const double guard = opt.blowup_factor * (l2_norm(u_now) + 1e-12) +
                         opt.blowup_factor * std::abs(h.h(opt.T > 1.0 ? 1.0 : opt.T));
    store(0.0);

    const std::size_t n_steps = static_cast<std::size_t>(std::llround(opt.T / opt.dt));
    for (std::size_t i = 0; i < n_steps; ++i) {
        z_state.advance(opt.dt);
        const std::vector<cplx>& z_hat = z_state.hat();
        const double t_next = (i + 1) * opt.dt;

        std::vector<cplx> w_next = w_hat;
        ComplexField u_next(g, Rep::physical, t_next);
        if (linear) {
            free_march_hat(w_next, tb);
            u_next = assemble(t_next, w_next, z_hat);
        } else {
            // extrapolation predictor, then fixed-point corrections of the
            // exponential midpoint rule
            ComplexField u_guess = u_now;
            if (i > 0)
                for (std::size_t j = 0; j < u_guess.size(); ++j)
                    u_guess[j] = 2.0 * u_now[j] - u_prev[j];
            for (int it = 0; it < opt.corrector_max; ++it) {
                ComplexField f_mid = nonlinearity(field_average(u_now, u_guess), params);
                w_next = w_hat;
                march_hat(w_next, tb, prop.hat_of_B(f_mid), opt.dt);
                u_next = assemble(t_next, w_next, z_hat);
                const double delta = l2_distance(u_next, u_guess);
                u_guess = u_next;
                if (delta <= opt.corrector_tol * std::max(1.0, l2_norm(u_next))) break;
            }
        }

        w_hat = std::move(w_next);
        u_prev = std::move(u_now);
        u_now = std::move(u_next);

        if (l2_norm(u_now) > guard) {
            traj.status = RunStatus::aborted_unstable;
            break;
        }
        if ((i + 1) % opt.snapshot_stride == 0 || i + 1 == n_steps) store(t_next);
    }
    return traj;
}

double x_norm_trajectory_diff(const Trajectory& a, const Trajectory& b) {
    if (a.snapshots.size() != b.snapshots.size())
        throw UsageError("x_norm_trajectory_diff: trajectory shapes differ");
    const std::size_t n = a.snapshots.size();
    std::vector<ComplexField> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = a.snapshots[i].u;
        for (std::size_t j = 0; j < d[i].size(); ++j) d[i][j] -= b.snapshots[i].u[j];
    }
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = a.snapshots[i].t;
        const double l2 = l2_norm(d[i]);
        const double dx = l2_norm(spectral_derivative(d[i]));
        const double dxx = l2_norm(spectral_second_derivative(d[i]));
        const double jn = l2_norm(apply_J(d[i], t));
        double dtn = 0.0;
        if (n >= 2) {
            const std::size_t i0 = (i == 0) ? 0 : i - 1;
            const std::size_t i1 = (i + 1 == n) ? i : i + 1;
            const double span = a.snapshots[i1].t - a.snapshots[i0].t;
            ComplexField fd = d[i1];
            for (std::size_t j = 0; j < fd.size(); ++j) fd[j] = (d[i1][j] - d[i0][j]) / span;
            dtn = l2_norm(fd);
        }
        sup = std::max(sup, std::sqrt(l2 * l2 + dx * dx + dxx * dxx + jn * jn + dtn * dtn));
    }
    return sup;
}

PicardResult picard_iterate(const ModelParams& params, const BoundaryData& h,
                            const SolveOptions& opt, int n_max, double tol) {
    params.validate();
    GridPtr g = params.u0.grid_ptr();
    RobinPropagator prop(g, params.alpha);
    const StepTables tb = make_tables(prop, opt.dt);
    const std::size_t n_steps = static_cast<std::size_t>(std::llround(opt.T / opt.dt));

    // z is iteration independent: build its fields on the whole time grid once
    OperatorParams op(params.alpha);
    std::vector<ComplexField> z_fields(n_steps + 1, ComplexField(g, Rep::physical, 0.0));
    std::vector<std::vector<cplx>> z_hats(n_steps + 1);
    {
        BoundaryHatState zs(g, h);
        z_hats[0] = zs.hat();
        for (std::size_t i = 1; i <= n_steps; ++i) {
            zs.advance(opt.dt);
            z_hats[i] = zs.hat();
            z_fields[i] = synthesize_with_boundary_lift(g, zs.hat(), h.h(i * opt.dt), op,
                                                        i * opt.dt);
        }
    }

    auto run_linear_pass = [&](const Trajectory* prev) {
        Trajectory out;
        out.dt = opt.dt;
        out.solver = "picard";
        std::vector<cplx> w_hat = prop.hat_of_B(params.u0);
        auto store = [&](std::size_t i) {
            Snapshot s;
            s.t = i * opt.dt;
            s.w = prop.hat_to_physical(w_hat, s.t);
            s.z = z_fields[i];
            std::vector<cplx> tot(w_hat.size());
            for (std::size_t k = 0; k < tot.size(); ++k) tot[k] = w_hat[k] + z_hats[i][k];
            s.u = synthesize_with_boundary_lift(g, tot, h.h(s.t), op, s.t);
            s.has_split = true;
            out.note_tail(s.u);
            out.snapshots.push_back(std::move(s));
        };
        store(0);
        for (std::size_t i = 0; i < n_steps; ++i) {
            if (prev) {
                ComplexField u_mid =
                    field_average(prev->snapshots[i].u, prev->snapshots[i + 1].u);
                march_hat(w_hat, tb, prop.hat_of_B(nonlinearity(u_mid, params)), opt.dt);
            } else {
                free_march_hat(w_hat, tb);
            }
            store(i + 1);
        }
        return out;
    };

    PicardResult res;
    Trajectory current = run_linear_pass(nullptr);  // u^{(1)}
    for (int m = 0; m < n_max; ++m) {
        Trajectory next = run_linear_pass(&current);
        const double diff = x_norm_trajectory_diff(next, current);
        res.diff_history.push_back(diff);
        current = std::move(next);
        res.iterations = m + 1;
        if (diff <= tol) {
            res.converged = true;
            break;
        }
    }
    res.traj = std::move(current);
    return res;
}

double local_existence_horizon(const ModelParams& params, const BoundaryData& h, double C) {
    double rho = l2_norm(params.u0) + linf_norm(params.u0);
    // crude boundary scale: sup over a coarse grid of |h| + |h'|
    for (double t = 0.0; t <= 10.0; t += 0.25)
        rho = std::max(rho, std::abs(h.h(t)) + std::abs(h.h1(t)));
    return std::pow(C * rho + 1.0, -4.0 / 3.0);
}

Trajectory solve(const ModelParams& params, const BoundaryData& h, const SolveOptions& opt,
                 SolveMethod method) {
    if (method == SolveMethod::picard) {
        if (opt.T > local_existence_horizon(params, h))
            std::fprintf(stderr,
                         "[halfline] warning: picard horizon T=%.3g exceeds the local-existence "
                         "scale %.3g; convergence is not guaranteed\n",
                         opt.T, local_existence_horizon(params, h));
        return picard_iterate(params, h, opt).traj;
    }
    return solve_stepped(params, h, opt);
}

}  // namespace halfline
