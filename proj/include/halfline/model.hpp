#pragma once

#include <string>

#include "halfline/field.hpp"

namespace halfline {

// Coupling, nonlinearity power, Robin coefficient, initial datum.
// The equation is  i u_t + (1/2) u_xx = lambda |u|^{p-1} u  on x > 0 with
// u(t,0) + alpha u_x(t,0) = h(t).
struct ModelParams {
    cplx lambda{0.0, 0.0};
    double p = 3.0;
    double alpha = -1.0;
    ComplexField u0;

    void validate() const {
        if (p < 2.0) throw ConfigError("nonlinearity power p must be >= 2");
        if (alpha == 0.0) throw ConfigError("Robin coefficient alpha must be nonzero");
    }
};

// lambda |u|^{p-1} u applied pointwise; p = 3 takes the |u|^2 fast path.
ComplexField nonlinearity(const ComplexField& u, const ModelParams& params);

// Initial datum families.
//   gaussian-odd   eps * [G(x; a, w) - G(x; -a, w)],  G = exp(-(x-a)^2/(2w^2))
//                  (vanishes at x = 0; free evolution known in closed form)
//   bump2          eps * x^2 exp(-(x/w)^2)   (value and slope vanish at 0)
//   zero
ComplexField make_initial_datum(GridPtr g, const std::string& family, double eps, double width,
                                double center);

// Closed-form free evolution of the odd Gaussian pair: the exact solution of
// i u_t + u_xx/2 = 0 with Dirichlet-compatible data G(.;a,w) - G(.;-a,w).
cplx free_gaussian_pair_at(double t, double x, double eps, double width, double center);

}  // namespace halfline
