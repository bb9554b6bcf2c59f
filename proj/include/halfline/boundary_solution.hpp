#pragma once

#include "halfline/boundary.hpp"
#include "halfline/operators.hpp"
#include "halfline/quadrature.hpp"

namespace halfline {

// Boundary-driven linear solution machinery.
//
// With the fixed transform convention the Dirichlet boundary solution is
//   z_D(t,x) = (1/sqrt(2 i pi)) int_0^t e^{i x^2/(2 tau)} (x / tau^{3/2})
//              h(t - tau) d tau
// and the Robin one is z = B^{-1} z_D.  The phase substitution u = x^2/(2 tau)
// turns every node evaluation into a linear-phase oscillatory integral
//   z_D(t,x) = sqrt(2)/sqrt(2 i pi) *
//              int_{x^2/2t}^inf e^{iu} u^{-1/2} h(t - x^2/(2u)) du
// handled by fixed phase panels plus a four-term integration-by-parts tail.
// The equivalent sine-spectral form, derived from the same closed form, is
//   F_s[z_D](t,p) = (i/sqrt(2 pi)) p int_0^t e^{-i p^2 tau/2} h(t-tau) d tau.

// Dirichlet solution at one point (quadrature; any x > 0, t > 0).
cplx z_dirichlet_at(const BoundaryData& h, double t, double x);

// Robin solution on the grid via per-node quadrature of z_D followed by
// B^{-1}; the boundary jump z_D(0+) = h(t) is split off as an e^{-x} lift
// that B^{-1} maps in closed form, so no Gibbs ringing reaches the result.
ComplexField z_exact(const BoundaryData& h, double t, GridPtr g, const OperatorParams& op);

// Marches hat{z_D}(t, p_k) with an exponential integrator that treats the
// oscillation e^{-i p^2 s/2} exactly and h by a cubic Taylor step (so the
// rule stays uniformly accurate in p).  Used incrementally by the solver and
// one-shot by z_spectral.
class BoundaryHatState {
  public:
    BoundaryHatState(GridPtr g, BoundaryData h);
    void advance(double dt);
    const std::vector<cplx>& hat() const { return hat_; }
    double time() const { return time_; }
    const BoundaryData& data() const { return h_; }
    GridPtr grid_ptr() const { return grid_; }

  private:
    GridPtr grid_;
    BoundaryData h_;
    std::vector<cplx> hat_;
    double time_ = 0.0;
};

// Synthesis of the physical z field from a hat state.  The sine coefficients
// of z_D carry a slowly decaying sqrt(2/pi) h(t)/p tail (the boundary value
// z_D(t,0+) = h(t) seen through the odd extension), so the jump structure is
// split off against the continuum coefficients of e^{-x} and restored as the
// closed form B^{-1}[h e^{-x}] = h e^{-x}/(1-alpha); the remainder decays
// like p^{-3} and synthesizes cleanly.
ComplexField synthesize_boundary_field(const BoundaryHatState& state, const OperatorParams& op);

// Same split applied to a combined hat state (w_hat + z_hat) whose jump
// content comes from the boundary datum alone.
ComplexField synthesize_with_boundary_lift(GridPtr g, const std::vector<cplx>& hat, cplx h_now,
                                           const OperatorParams& op, double time);

// Spectral route to z(t): march the hat state from 0 to t, then synthesize
// through the per-mode B^{-1} with the jump lift.
ComplexField z_spectral(const BoundaryData& h, double t, GridPtr g, const OperatorParams& op,
                        double dt_quad = 0.02);

// V(m) = int_0^inf e^{-y + i m y^2} dy, m >= 0, by rotating onto the
// pi/4 ray where the integrand decays like e^{-r/sqrt(2) - m r^2}.
cplx fresnel_laplace_V(double m);

// Boundary traces of the Robin solution.  z(t,0+) comes from the closed
// kernel int_R e^{-i p^2 tau/2} p/(1+i alpha p) dp expressed through V; the
// derivative trace then follows from the Robin relation (its independent
// verification is the business of the field-level tests).
struct BoundaryTraces {
    cplx z0;    // z(t,0+)
    cplx dzx0;  // d/dx z(t,0+)
    cplx dzt0;  // d/dt z(t,0+)
};
BoundaryTraces z_traces(const BoundaryData& h, double t, const OperatorParams& op);

// Stationary-phase split of the space-time kernel
//   I(s,x) = (1/2pi) int_R e^{ipx - i p^2 s/2} p/(1+i alpha p) dp.
// `full` is evaluated by rotating the Gaussian factor onto its steepest
// descent ray; `leading` is the stationary-point term at p* = x/s.
struct KernelSplit {
    cplx full;
    cplx leading;
    cplx remainder;  // full - leading
    double s, x;
};
KernelSplit kernel_I(double s, double x, const OperatorParams& op);

// Brute-force oracle for I(s,x): direct phase-panel quadrature over p with
// integration-by-parts tails.  Independent of the rotated route.
cplx kernel_I_bruteforce(double s, double x, const OperatorParams& op);

// x*z(t,x) through the two-kernel representation obtained by moving the
// x-weight onto the symbol (integration by parts in p and in tau):
//   x z = i/(2pi) int_R e^{ipx} [ I_h(p)/(1+i a p)^2
//                                 - 2 (I_h - t I_h' + I_sh')(p)/(1+i a p) ] dp
// with I_w(p) = int_0^t e^{-i p^2 tau/2} w(t-tau) d tau.
ComplexField weighted_moment_xz(const BoundaryData& h, double t, GridPtr g,
                                const OperatorParams& op, double dt_quad = 0.02);

// int_{t0}^inf e^{i omega tau} h(tau) d tau for omega > 0; sigma = omega*tau
// paneling plus the linear-phase tail, uniformly in omega.
cplx halfline_oscillatory_integral(const BoundaryData& h, double omega, double t0);

}  // namespace halfline
