#pragma once

#include <functional>

#include "halfline/boundary_solution.hpp"
#include "halfline/evolution.hpp"
#include "halfline/model.hpp"
#include "halfline/trajectory.hpp"

namespace halfline {

// Nonlinear solver for  i u_t + u_xx/2 = lambda |u|^{p-1} u,  Bu(t,0) = h(t).
//
// The state is carried as sine coefficients of B w (hat space), where the
// free Robin flow is exact multiplication by e^{-i p^2 dt/2}; the Duhamel
// source integral uses the exponential midpoint rule
//   w_hat(t+dt) = E(dt) w_hat(t) - i dt E(dt/2) F_s[B f(t+dt/2)]
// with the -i factor fixed by i w_t + w_xx/2 = f.  The boundary part z is
// marched alongside by BoundaryHatState and u = w + z is assembled, never
// evolved on its own.

struct SolveOptions {
    double T = 1.0;
    double dt = 0.01;
    std::size_t snapshot_stride = 1;
    int corrector_max = 5;
    double corrector_tol = 1e-13;
    double blowup_factor = 1e6;
};

// Duhamel marching of the homogeneous-boundary part w with a prescribed
// source f(t) (zero boundary data).  f_source may be null for the free flow.
Trajectory duhamel_solve_w(const ModelParams& params,
                           const std::function<ComplexField(double)>& f_source,
                           const SolveOptions& opt);

// Full nonlinear run, window-free hat marching (the stepped-duhamel method).
Trajectory solve_stepped(const ModelParams& params, const BoundaryData& h,
                         const SolveOptions& opt);

struct PicardResult {
    Trajectory traj;
    std::vector<double> diff_history;  // ||u^{(m+1)} - u^{(m)}||_{X_T}
    bool converged = false;
    int iterations = 0;
};

// Global linearized iteration: u^{(m+1)} solves the linear Robin problem with
// source lambda |u^{(m)}|^{p-1} u^{(m)}; u^{(1)} is the source-free linear
// solution U(t) u0 + z.  z is computed once, iteration-independent.
PicardResult picard_iterate(const ModelParams& params, const BoundaryData& h,
                            const SolveOptions& opt, int n_max = 12, double tol = 1e-10);

enum class SolveMethod { picard, stepped_duhamel };

Trajectory solve(const ModelParams& params, const BoundaryData& h, const SolveOptions& opt,
                 SolveMethod method = SolveMethod::stepped_duhamel);

// sup-over-time X norm (local-existence space) of a trajectory difference:
// L2, d/dx, J, d2/dx2 and a finite-difference d/dt term.
double x_norm_trajectory_diff(const Trajectory& a, const Trajectory& b);

// Local existence horizon estimate (C rho + 1)^{-4/3} used for warnings.
double local_existence_horizon(const ModelParams& params, const BoundaryData& h, double C = 1.0);

}  // namespace halfline
