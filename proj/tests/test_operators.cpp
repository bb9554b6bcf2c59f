#include "doctest.h"

#include <cmath>
#include <random>

#include "halfline/operators.hpp"
#include "test_helpers.hpp"

using namespace halfline;
using halfline::testing::random_compatible_field;
using halfline::testing::random_smooth_field;

TEST_SUITE("operators") {
    TEST_CASE("B inverse of B is the identity on interior-supported fields") {
        std::mt19937 rng(11);
        for (double alpha : {-1.0, -0.35, 0.7}) {
            auto g = make_grid(60.0, 1535);
            OperatorParams op(alpha);
            ComplexField f = random_smooth_field(g, rng);
            ComplexField rt = apply_B_inverse(apply_B(f, op), op);
            CHECK(rel_l2_distance(rt, f) < 1e-8);
        }
    }

    TEST_CASE("alpha = 0 is rejected") {
        CHECK_THROWS_AS(OperatorParams(0.0), ConfigError);
    }

    TEST_CASE("L-infinity bound of B inverse with the Plancherel constant") {
        // |B^{-1} f|_inf <= |f|_L2(half line) / sqrt(|alpha|), the constant
        // assembled from || 1/(1+i a p) ||_{L2(R)} = sqrt(pi/|a|) and the
        // odd-extension factor sqrt(2)
        std::mt19937 rng(13);
        auto g = make_grid(40.0, 511);
        for (double alpha : {-1.0, -2.5}) {
            OperatorParams op(alpha);
            const double C = 1.0 / std::sqrt(std::abs(alpha));
            for (int trial = 0; trial < 100; ++trial) {
                ComplexField f = random_smooth_field(g, rng);
                ComplexField bi = apply_B_inverse(f, op);
                CHECK(linf_norm(bi) <= C * l2_norm(f) * (1.0 + 1e-9));
            }
        }
    }

    TEST_CASE("operator identity B^{-1} - 1 = -alpha B^{-1} d/dx") {
        std::mt19937 rng(17);
        auto g = make_grid(60.0, 1535);
        OperatorParams op(-0.8);
        ComplexField f = random_smooth_field(g, rng);
        ComplexField lhs = apply_B_inverse(f, op);
        for (std::size_t j = 0; j < f.size(); ++j) lhs[j] -= f[j];
        ComplexField rhs = apply_B_inverse(spectral_derivative(f), op);
        for (std::size_t j = 0; j < f.size(); ++j) rhs[j] *= -op.alpha;
        double worst = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) worst = std::max(worst, std::abs(lhs[j] - rhs[j]));
        CHECK(worst < 1e-8);
    }

    TEST_CASE("J at t = 0 is multiplication by x, exactly") {
        std::mt19937 rng(19);
        auto g = make_grid(40.0, 255);
        ComplexField f = random_smooth_field(g, rng);
        ComplexField jf = apply_J(f, 0.0);
        for (std::size_t j = 0; j < f.size(); ++j)
            CHECK(jf[j] == f[j] * g->node(j));
    }

    TEST_CASE("J conjugation identity J = i t M d/dx M^{-1}") {
        std::mt19937 rng(23);
        auto g = make_grid(40.0, 2047);
        const double t = 1.0;
        ComplexField f = random_compatible_field(g, rng);
        ComplexField jf = apply_J(f, t);

        ComplexField m = f;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double x = g->node(j);
            m[j] *= std::polar(1.0, -x * x / (2.0 * t));  // M(-t) = e^{-ix^2/2t}
        }
        ComplexField dm = spectral_derivative(m);
        double worst = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double x = g->node(j);
            const cplx rhs = cplx(0.0, t) * std::polar(1.0, x * x / (2.0 * t)) * dm[j];
            worst = std::max(worst, std::abs(jf[j] - rhs));
        }
        CHECK(worst < 1e-8);
    }

    TEST_CASE("J on a Gaussian against the closed form") {
        auto g = make_grid(40.0, 2047);
        const double t = 1.0;
        ComplexField f(g);
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double x = g->node(j);
            f[j] = std::exp(-x * x);
        }
        ComplexField jf = apply_J(f, t);
        double worst = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const double x = g->node(j);
            const cplx exact = (x - 2.0 * cplx(0.0, t) * x) * std::exp(-x * x);
            worst = std::max(worst, std::abs(jf[j] - exact));
        }
        CHECK(worst < 1e-8);
    }

    TEST_CASE("interpolation inequalities of the J calculus, constant 2") {
        // |f|_inf^2 <= (2/t) |Jf|_2 |f|_2  and  |f|_inf^2 <= 2 |f'|_2 |f|_2
        std::mt19937 rng(29);
        auto g = make_grid(40.0, 511);
        for (int trial = 0; trial < 100; ++trial) {
            ComplexField f = random_smooth_field(g, rng);
            const double linf2 = linf_norm(f) * linf_norm(f);
            const double l2 = l2_norm(f);
            CHECK(linf2 <= 2.0 * l2_norm(spectral_derivative(f)) * l2 * (1.0 + 1e-9));
            for (double t : {0.5, 1.0, 2.0})
                CHECK(linf2 <= (2.0 / t) * l2_norm(apply_J(f, t)) * l2 * (1.0 + 1e-9));
        }
    }
}
