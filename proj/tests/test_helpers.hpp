#pragma once

#include <cmath>
#include <random>

#include "halfline/field.hpp"

namespace halfline::testing {

// Random smooth complex field: a few Gaussian bumps with random centers,
// widths and complex amplitudes.  Kept well clear of both walls so that the
// artificial truncation at x = L stays below the identity tolerances even
// after moderate free spreading (bump width >= 1.2 bounds the momentum
// content, margin 0.35 L bounds the excursion).
inline ComplexField random_smooth_field(GridPtr g, std::mt19937& rng, double margin_frac = 0.35,
                                        double wmin = 1.2, double wmax = 2.2) {
    const double L = g->length();
    std::uniform_real_distribution<double> center(margin_frac * L, (1.0 - margin_frac) * L);
    std::uniform_real_distribution<double> width(wmin, wmax);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    ComplexField f(g, Rep::physical, 0.0);
    const int bumps = 3 + static_cast<int>(rng() % 3);
    for (int b = 0; b < bumps; ++b) {
        const double c = center(rng), w = width(rng);
        const cplx a(amp(rng), amp(rng));
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double d = (g->node(j) - c) / w;
            f[j] += a * std::exp(-0.5 * d * d);
        }
    }
    return f;
}

// Field vanishing at x = 0 (multiplied by tanh^2 x) for boundary-sensitive
// identities that assume the corner compatibility.
inline ComplexField random_compatible_field(GridPtr g, std::mt19937& rng) {
    ComplexField f = random_smooth_field(g, rng);
    for (std::size_t j = 0; j < g->size(); ++j) {
        const double th = std::tanh(g->node(j));
        f[j] *= th * th;
    }
    return f;
}

}  // namespace halfline::testing
