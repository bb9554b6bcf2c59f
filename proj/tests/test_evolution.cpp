#include "doctest.h"

#include <cmath>
#include <random>

#include "halfline/evolution.hpp"
#include "halfline/fft.hpp"
#include "halfline/model.hpp"
#include "halfline/quadrature.hpp"
#include "test_helpers.hpp"

using namespace halfline;
using halfline::testing::random_compatible_field;

namespace {

// Whole-line free propagation of the odd extension on a twice-larger
// periodic domain with its own wavenumber set: an independent discretization
// of the image formula.
ComplexField odd_extension_oracle(const ComplexField& f, double t) {
    const Grid& g = f.grid();
    const std::size_t n = g.size();
    const std::size_t m2 = 8 * (n + 1);  // [-2L, 2L) at the same dx
    std::vector<cplx> buf(m2, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        buf[j + 1] = f[j];
        buf[m2 - 1 - j] = -f[j];
    }
    detail::cfft(buf.data(), m2, true);
    const double dp = 2.0 * Grid::pi() / (m2 * g.dx());
    for (std::size_t m = 0; m < m2; ++m) {
        const double p = (m <= m2 / 2) ? dp * m : dp * (static_cast<double>(m) - m2);
        buf[m] *= std::polar(1.0, -0.5 * p * p * t);
    }
    detail::cfft(buf.data(), m2, false);
    ComplexField out(f.grid_ptr(), f.rep(), f.time() + t);
    for (std::size_t j = 0; j < n; ++j) out[j] = buf[j + 1] / static_cast<double>(m2);
    return out;
}

}  // namespace

TEST_SUITE("evolution") {
    TEST_CASE("dirichlet flow: identity at t = 0 and image-formula equivalence") {
        std::mt19937 rng(31);
        auto g = make_grid(80.0, 2047);
        ComplexField f = random_compatible_field(g, rng);
        ComplexField id = free_evolution_dirichlet(f, 0.0);
        CHECK(l2_distance(id, f) == 0.0);

        ComplexField a = free_evolution_dirichlet(f, 0.7);
        ComplexField b = odd_extension_oracle(f, 0.7);
        CHECK(rel_l2_distance(a, b) < 1e-8);

        // Dirichlet wall: the propagated field stays pinned at x -> 0
        CHECK(std::abs(wall_value(a)) < 1e-6 * linf_norm(a) + 1e-10);
    }

    TEST_CASE("robin flow: unitarity, inverse, group law") {
        std::mt19937 rng(37);
        auto g = make_grid(80.0, 2047);
        OperatorParams op(-1.0);
        ComplexField f = random_compatible_field(g, rng);

        CHECK(l2_distance(free_evolution_robin(f, 0.0, op), f) == 0.0);

        ComplexField u1 = free_evolution_robin(f, 1.3, op);
        CHECK(std::abs(l2_norm(u1) - l2_norm(f)) < 1e-8 * l2_norm(f));

        ComplexField back = free_evolution_robin(u1, -1.3, op);
        CHECK(rel_l2_distance(back, f) < 1e-8);

        for (double t : {0.1, 0.5, 1.0})
            for (double s : {0.1, 0.5, 1.0}) {
                ComplexField two = free_evolution_robin(free_evolution_robin(f, s, op), t, op);
                ComplexField one = free_evolution_robin(f, t + s, op);
                CHECK(l2_distance(two, one) < 1e-8);
            }
    }

    TEST_CASE("factorized form agrees with the spectral pipeline") {
        auto g = make_grid(40.0, 2047);
        OperatorParams op(-1.0);
        ComplexField f(g);
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double x = g->node(j);
            f[j] = x * std::exp(-0.5 * (x - 6.0) * (x - 6.0)) +
                   cplx(0.0, 0.4) * x * std::exp(-0.5 * (x - 9.0) * (x - 9.0));
        }
        const double t = 1.0;
        ComplexField viaU = free_evolution_robin(f, t, op);
        ComplexField viaF = mdtfm_factorization(f, t, op);
        CHECK(rel_l2_distance(viaF, viaU) < 1e-4);
        CHECK_THROWS_AS(mdtfm_factorization(f, 0.0, op), UsageError);
    }

    TEST_CASE("quadratic phase factors cancel exactly") {
        std::mt19937 rng(41);
        auto g = make_grid(40.0, 255);
        ComplexField f = random_compatible_field(g, rng);
        ComplexField mm = quadratic_phase(quadratic_phase(f, 1.7), -1.7);
        for (std::size_t j = 0; j < f.size(); ++j) CHECK(std::abs(mm[j] - f[j]) < 1e-15);
    }

    TEST_CASE("dilation leg of the factorization is L2-unitary") {
        // resample the band-limited interpolant at x/t and compare trapezoid
        // masses; f supported well inside (0, L/t)
        auto g = make_grid(40.0, 2047);
        const double t = 2.0;
        ComplexField f(g);
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double x = g->node(j);
            f[j] = std::exp(-2.0 * (x - 8.0) * (x - 8.0));
        }
        std::vector<cplx> coef = sine_analysis(*g, f.values());
        std::vector<double> pts(g->size());
        for (std::size_t j = 0; j < g->size(); ++j) pts[j] = g->node(j) / t;
        std::vector<cplx> vals = sine_series_at(*g, coef, pts);
        double m2 = 0.0;
        for (const auto& v : vals) m2 += std::norm(v / std::sqrt(t));
        const double dil = std::sqrt(m2 * g->dx());
        CHECK(std::abs(dil - l2_norm(f)) < 1e-8 * l2_norm(f));
    }

    TEST_CASE("phi moments match series and closed forms") {
        for (double pp : {0.1, 3.0, 40.0}) {
            const cplx a(0.0, -0.5 * pp * pp);
            const double dt = 0.01;
            auto phi = detail::phi_moments(a, dt);
            for (int m = 0; m < 4; ++m) {
                QuadResult acc = adaptive_gk(
                    [&](double s) { return std::pow(s, m) * std::exp(a * s); }, 0.0, dt,
                    1e-13 * std::pow(dt, m + 1));
                CHECK(std::abs(phi[m] - acc.value) < 1e-11 * std::abs(acc.value) + 1e-20);
            }
        }
    }
}
