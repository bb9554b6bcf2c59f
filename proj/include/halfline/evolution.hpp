#pragma once

#include <array>
#include <vector>

#include "halfline/operators.hpp"

namespace halfline {

// Free propagation on the half-line.
//
// The free group solving  i u_t + (1/2) u_xx = 0  acts on sine coefficients
// as multiplication by e^{-i p^2 t / 2}; that sign is pinned by the image
// kernel (2 pi i t)^{-1/2} (e^{i|x-y|^2/2t} - e^{i|x+y|^2/2t}) and is what
// the finite-difference oracle converges to.  The Robin group conjugates the
// Dirichlet one with the boundary operator:
//   U(t) = B^{-1} F_s e^{-i p^2 t/2} F_s B.

// Dirichlet flow: pure sine-spectral propagation.
ComplexField free_evolution_dirichlet(const ComplexField& f, double t);

// Robin flow: B -> F_s -> multiplier -> mixed B^{-1} synthesis.
ComplexField free_evolution_robin(const ComplexField& f, double t, const OperatorParams& op);

// Factorized form  U(t) f = B^{-1}[ -i M D_t F_s M B f ],  t > 0, with
// M = e^{i x^2/(2t)} and the L^2-unitary dilation D_t g(x) = (it)^{-1/2} g(x/t).
// The dilation resamples the band-limited sine transform off-grid, so this
// equals free_evolution_robin up to aliasing of the chirp factors.
ComplexField mdtfm_factorization(const ComplexField& f, double t, const OperatorParams& op);

// Synthesize a physical field from sine coefficients of (B u):
//   u = sum_k hat_k * [sin(p_k x) - alpha p_k cos(p_k x)] / (1 + alpha^2 p_k^2)
// (per-mode closed form of B^{-1} on a sine polynomial).
ComplexField robin_inverse_synthesis(GridPtr g, double alpha, const std::vector<cplx>& hat,
                                     double time = 0.0);

// Forward sine transform of a physical field evaluated at arbitrary
// frequencies (the exact discrete sum, not an interpolation).
std::vector<cplx> sine_forward_at(const Grid& g, const std::vector<cplx>& physical,
                                  const std::vector<double>& freqs);

namespace detail {
// Moments int_0^dt s^m e^{a s} ds for m = 0..3 (exponential-integrator rule).
std::array<cplx, 4> phi_moments(cplx a, double dt);
}  // namespace detail

// Marches sine-hat states of B-conjugated data: shared by the boundary field
// builder and the nonlinear solver.
class RobinPropagator {
  public:
    RobinPropagator(GridPtr grid, double alpha);

    const Grid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    double alpha() const { return alpha_; }

    // e^{-i p_k^2 t / 2} on the sine modes.
    std::vector<cplx> free_phase(double t) const;

    // hat <- phase(dt) * hat
    void advance_hat(std::vector<cplx>& hat, const std::vector<cplx>& phase_dt) const;

    // Physical field from a hat state (hat = F_s[B u]).
    ComplexField hat_to_physical(const std::vector<cplx>& hat, double time) const;

    // Hat state of a physical source: F_s[B f] with the lifted derivative.
    std::vector<cplx> hat_of_B(const ComplexField& f) const;

  private:
    GridPtr grid_;
    double alpha_;
    OperatorParams op_;
};

}  // namespace halfline
