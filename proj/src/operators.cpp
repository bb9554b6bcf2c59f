#include "halfline/operators.hpp"

#include <cmath>

namespace halfline {

ComplexField apply_B(const ComplexField& f, const OperatorParams& op) {
    f.require(Rep::physical, "apply_B");
    ComplexField d = spectral_derivative(f);
    ComplexField out = f;
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = f[j] + op.alpha * d[j];
    return out;
}

ComplexField apply_B_inverse(const ComplexField& f, const OperatorParams& op) {
    f.require(Rep::physical, "apply_B_inverse");
    const double a = op.alpha;
    return apply_multiplier(f, [a](double p) { return 1.0 / cplx(1.0, a * p); });
}

ComplexField apply_J(const ComplexField& f, double t) {
    f.require(Rep::physical, "apply_J");
    ComplexField out = multiply_by_x(f);
    if (t != 0.0) {
        ComplexField d = spectral_derivative(f);
        const cplx it(0.0, t);
        for (std::size_t j = 0; j < f.size(); ++j) out[j] += it * d[j];
    }
    return out;
}

ComplexField multiply_by_x(const ComplexField& f) {
    f.require(Rep::physical, "multiply_by_x");
    ComplexField out = f;
    for (std::size_t j = 0; j < f.size(); ++j) out[j] *= f.grid().node(j);
    return out;
}

ComplexField quadratic_phase(const ComplexField& f, double t) {
    f.require(Rep::physical, "quadratic_phase");
    if (t == 0.0) throw UsageError("quadratic_phase: t must be nonzero");
    ComplexField out = f;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double x = f.grid().node(j);
        out[j] *= std::polar(1.0, x * x / (2.0 * t));
    }
    return out;
}

}  // namespace halfline
