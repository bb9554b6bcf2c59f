#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace halfline {

using cplx = std::complex<double>;
using CIntegrand = std::function<cplx(double)>;

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;       // accumulated Kronrod error estimate
    std::size_t evals = 0;
};

// 15-point Gauss-Kronrod on [a,b]; error estimate from the embedded G7.
QuadResult gk15(const CIntegrand& f, double a, double b);

// Adaptive bisection to absolute tolerance.  Deterministic refinement order.
// Throws NumericsError when the depth cap is hit with the estimate above tol.
QuadResult adaptive_gk(const CIntegrand& f, double a, double b, double abs_tol,
                       int max_depth = 28);

// Fixed-panel G15 sum over the ordered breakpoints.  No adaptivity: the
// result is exactly linear in the integrand, which some invariants rely on.
QuadResult fixed_panels(const CIntegrand& f, const std::vector<double>& breakpoints);

// Phase-equidistributed breakpoints for integrands oscillating like
// e^{i*phase(u)} with monotone phase: panels of at most max_phase radians,
// and at most max_len in length.
std::vector<double> phase_breakpoints(double a, double b,
                                      const std::function<double(double)>& phase,
                                      double max_phase, double max_len);

// Tail of a linear-phase oscillatory integral by four integrations by parts:
//   int_U^inf e^{iu} phi(u) du
//     ~= -e^{iU} * sum_{m=0..3} (-1)^m phi^(m)(U) / i^{m+1},
// with the dropped remainder bounded by int |phi''''|.  `derivs` returns
// {phi, phi', phi'', phi'''} at U.
cplx linear_phase_tail(double U, const std::function<std::array<cplx, 4>(double)>& derivs);

}  // namespace halfline
