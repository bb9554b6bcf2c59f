#pragma once

#include "halfline/boundary.hpp"
#include "halfline/model.hpp"
#include "halfline/trajectory.hpp"

// Finite-difference reference solver.  Deliberately independent of the
// spectral machinery: only grid/field/model/boundary types are shared, all
// discrete work here is tridiagonal algebra.

namespace halfline::fd {

struct FDConfig {
    GridPtr grid;          // shared node layout; FD adds the x = 0 node
    double dt = 0.005;
    double theta = 0.5;    // 1/2 = Crank-Nicolson, (1/2,1] available
    ModelParams params;
    BoundaryData boundary = BoundaryData::zero();
    std::size_t snapshot_stride = 1;

    void validate() const {
        if (!grid) throw ConfigError("fd: grid required");
        if (!(dt > 0.0)) throw ConfigError("fd: dt must be positive");
        if (theta < 0.5 || theta > 1.0) throw ConfigError("fd: theta must lie in [1/2, 1]");
        params.validate();
    }
};

// theta-scheme for i u_t + u_xx/2 = lambda |u|^{p-1} u with the Robin
// condition closed by a ghost node at x = -dx:
//   u_0 + alpha (u_1 - u_{-1}) / (2 dx) = h(t),
// homogeneous Dirichlet at x = L, one predictor-corrector pass for the
// nonlinear midpoint source.  Snapshots store the interior nodes so the
// output matches the spectral solver's Trajectory layout.
Trajectory crank_nicolson_robin(const FDConfig& cfg, double T);

// |u(t,0) + alpha u_x(t,0) - h(t)| per snapshot, boundary values estimated
// from the interior samples by one-sided cubic extrapolation.  Works on any
// solver's trajectory.
std::vector<double> robin_residual(const Trajectory& traj, const BoundaryData& h, double alpha);

}  // namespace halfline::fd
