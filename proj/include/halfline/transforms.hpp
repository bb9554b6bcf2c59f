#pragma once

#include <functional>
#include <vector>

#include "halfline/field.hpp"

namespace halfline {

// Transform conventions (fixed once, used everywhere):
//
//   sine analysis    a_k = sqrt(2/pi) * dx * sum_j sin(p_k x_j) f_j
//   sine synthesis   f_j = sqrt(2/pi) * dp * sum_k sin(p_k x_j) a_k
//
// so analysis approximates the half-line transform
//   (F_s f)(p) = sqrt(2/pi) \int_0^inf sin(px) f(x) dx
// and synthesis is its exact discrete inverse: fourier_sine applied twice is
// the identity to roundoff.  The cosine companion uses the same constants on
// the frequency set q_k = k*pi/L, k = 0..N-1, with explicit boundary samples
// entering with trapezoid weight 1/2 (the grid itself stores only interior
// nodes).  Top two cosine modes are dropped by the fixed layout, so cosine
// round trips are exact only up to the spectral tail of the field.

// fourier_sine: involution between physical and sine_spectral.
ComplexField fourier_sine(const ComplexField& f);

// fourier_cosine: physical -> cosine_spectral (with optional boundary values
// f(0), f(L) for quadrature-grade accuracy), or cosine_spectral -> physical.
ComplexField fourier_cosine(const ComplexField& f, cplx f_left = 0.0, cplx f_right = 0.0);

// Derivative of the sine interpolant, with an e^{-x} lift so that fields with
// f(0) != 0 do not ring: the extrapolated boundary value f0 is subtracted as
// f0*e^{-x} (differentiated analytically) before transforming.
// If boundary_value is non-null, *boundary_value receives f'(0+).
ComplexField spectral_derivative(const ComplexField& f, cplx* boundary_value = nullptr);
ComplexField spectral_second_derivative(const ComplexField& f);

// Cubic extrapolation of a physical field to x = 0+.
cplx extrapolate_to_origin(const ComplexField& f);

// Raw helpers on coefficient vectors (no lift, no field wrapper).
std::vector<cplx> sine_analysis(const Grid& g, const std::vector<cplx>& physical);
std::vector<cplx> sine_synthesis(const Grid& g, const std::vector<cplx>& coeffs);

// Evaluate the sine interpolant of `coeffs` (continuum convention, modes
// p_k) at arbitrary points.  O(N * points) direct summation; used by the
// dilation operator where band-limited off-grid values are required.
std::vector<cplx> sine_series_at(const Grid& g, const std::vector<cplx>& coeffs,
                                 const std::vector<double>& points);

// Apply a Fourier multiplier mu(p) through the odd extension of a physical
// field onto [-L, L) and a full complex FFT of length 2(N+1):
//   f  ->  restrict( IFFT[ mu(p) * FFT[odd extension of f] ] ).
// The symbol acts as  O e^{ipx} = mu(p) e^{ipx}.  Exact composable operator
// algebra for everything rational/exponential in ip (B, B^-1, free flows).
ComplexField apply_multiplier(const ComplexField& f, const std::function<cplx(double)>& mu);

// Same, but the symbol is evaluated once per wavenumber into a reusable table.
std::vector<cplx> multiplier_table(const Grid& g, const std::function<cplx(double)>& mu);
ComplexField apply_multiplier_table(const ComplexField& f, const std::vector<cplx>& table);

}  // namespace halfline
