#pragma once

#include "halfline/field.hpp"
#include "halfline/transforms.hpp"

namespace halfline {

// Robin boundary operator B = 1 + alpha*d/dx and friends.
//
// Sign of alpha: B is invertible on decaying functions of the half-line iff
// alpha < 0 (for alpha > 0 the kernel e^{-x/alpha} is square integrable, and
// the Robin Laplacian carries a bound state).  The operator layer accepts any
// alpha != 0; solver presets stick to alpha < 0.
struct OperatorParams {
    double alpha;
    explicit OperatorParams(double a) : alpha(a) {
        if (a == 0.0) throw ConfigError("Robin coefficient alpha must be nonzero");
    }
};

// B f = f + alpha f', derivative taken through the lifted sine interpolant.
ComplexField apply_B(const ComplexField& f, const OperatorParams& op);

// B^{-1} through the odd-extension Fourier multiplier 1/(1 + i*alpha*p).
ComplexField apply_B_inverse(const ComplexField& f, const OperatorParams& op);

// J = x + i t d/dx; at t = 0 this degenerates to multiplication by x.
ComplexField apply_J(const ComplexField& f, double t);

// Pointwise multiplication by the node coordinate.
ComplexField multiply_by_x(const ComplexField& f);

// Quadratic phase M(t) = e^{i x^2 / (2t)} applied pointwise (t != 0).
ComplexField quadratic_phase(const ComplexField& f, double t);

}  // namespace halfline
