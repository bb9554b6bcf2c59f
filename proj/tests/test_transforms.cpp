#include "doctest.h"

#include <cmath>
#include <random>

#include "halfline/transforms.hpp"
#include "test_helpers.hpp"

using namespace halfline;
using halfline::testing::random_smooth_field;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
const double kSqrt2OverPi = std::sqrt(2.0 / kPi);
}  // namespace

TEST_SUITE("grid") {
    TEST_CASE("DST-I layout: nodes and wavenumbers") {
        auto g = make_grid(10.0, 9);
        CHECK(g->dx() == doctest::Approx(1.0));
        for (std::size_t j = 0; j < 9; ++j)
            CHECK(g->node(j) == doctest::Approx(static_cast<double>(j + 1)));
        for (std::size_t k = 0; k < 9; ++k)
            CHECK(g->wavenumber(k) == doctest::Approx((k + 1) * kPi / 10.0));
        CHECK(g->node(0) > 0.0);
        CHECK(g->node(8) < 10.0);
    }

    TEST_CASE("dx = L/(N+1)") {
        auto g = make_grid(40.0, 1024);
        CHECK(g->dx() == doctest::Approx(40.0 / 1025.0).epsilon(1e-15));
    }

    TEST_CASE("bad configuration rejected") {
        CHECK_THROWS_AS(make_grid(0.0, 16), ConfigError);
        CHECK_THROWS_AS(make_grid(-1.0, 16), ConfigError);
        CHECK_THROWS_AS(make_grid(10.0, 4), ConfigError);
    }
}

TEST_SUITE("transforms") {
    TEST_CASE("pure sine mode concentrates on one bin") {
        auto g = make_grid(20.0, 255);
        ComplexField f(g);
        const double p1 = g->wavenumber(0);
        for (std::size_t j = 0; j < g->size(); ++j) f[j] = std::sin(p1 * g->node(j));
        ComplexField s = fourier_sine(f);
        // expected value: sqrt(2/pi) * dx * (N+1)/2 = sqrt(2/pi) * L/2
        CHECK(std::abs(s[0] - kSqrt2OverPi * 10.0) < 1e-10);
        double rest = 0.0;
        for (std::size_t k = 1; k < s.size(); ++k) rest = std::max(rest, std::abs(s[k]));
        CHECK(rest < 1e-10);
    }

    TEST_CASE("fourier_sine is an involution") {
        auto g = make_grid(40.0, 511);
        std::mt19937 rng(7);
        for (int trial = 0; trial < 5; ++trial) {
            ComplexField f = random_smooth_field(g, rng);
            ComplexField rt = fourier_sine(fourier_sine(f));
            CHECK(rel_l2_distance(rt, f) < 1e-12);
        }
    }

    TEST_CASE("exp(-x) sine spectrum matches direct trapezoid quadrature") {
        auto g = make_grid(40.0, 1024);
        ComplexField f(g);
        for (std::size_t j = 0; j < g->size(); ++j) f[j] = std::exp(-g->node(j));
        ComplexField s = fourier_sine(f);
        // independent oracle: direct trapezoid sum of sqrt(2/pi) int sin(px) e^{-x} dx
        for (std::size_t k = 0; k < g->size(); k += 97) {
            const double p = g->wavenumber(k);
            double acc = 0.0;  // endpoints contribute zero through sin
            for (std::size_t j = 0; j < g->size(); ++j)
                acc += std::sin(p * g->node(j)) * std::exp(-g->node(j));
            const double oracle = kSqrt2OverPi * g->dx() * acc;
            CHECK(std::abs(s[k] - oracle) < 1e-6);
            // the continuum shape p/(1+p^2) holds where trapezoid error is small
            if (p < 10.0) CHECK(std::abs(s[k] - kSqrt2OverPi * p / (1.0 + p * p)) < 1e-3);
        }
    }

    TEST_CASE("exp(-x) cosine spectrum matches direct trapezoid quadrature") {
        auto g = make_grid(40.0, 1024);
        ComplexField f(g);
        for (std::size_t j = 0; j < g->size(); ++j) f[j] = std::exp(-g->node(j));
        const double fL = std::exp(-40.0);
        ComplexField c = fourier_cosine(f, 1.0, fL);
        for (std::size_t k = 0; k < g->size(); k += 97) {
            const double q = k * g->dp();
            double acc = 0.5 + 0.5 * std::cos(q * 40.0) * fL;
            for (std::size_t j = 0; j < g->size(); ++j)
                acc += std::cos(q * g->node(j)) * std::exp(-g->node(j));
            const double oracle = kSqrt2OverPi * g->dx() * acc;
            CHECK(std::abs(c[k] - oracle) < 1e-6);
            CHECK(std::abs(c[k] - kSqrt2OverPi / (1.0 + q * q)) < 1e-3);
        }
    }

    TEST_CASE("cosine transform Parseval") {
        // even-pair bumps: the even extension is smooth at both walls, so the
        // two dropped top modes are far below the tolerance
        auto g = make_grid(40.0, 511);
        ComplexField f(g);
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j);
            f[j] = cplx(std::exp(-0.5 * (x - 17.0) * (x - 17.0)),
                        0.3 * std::exp(-0.5 * (x - 23.0) * (x - 23.0))) +
                   std::exp(-0.5 * (x + 17.0) * (x + 17.0)) +
                   cplx(0.0, 0.3) * std::exp(-0.5 * (x + 23.0) * (x + 23.0));
        }
        ComplexField c = fourier_cosine(f);
        // discrete Parseval of the convention: dq-weighted spectral sum with a
        // half weight on the k = 0 slot equals the dx-weighted physical sum
        double spec = 0.5 * std::norm(c[0]);
        for (std::size_t k = 1; k < c.size(); ++k) spec += std::norm(c[k]);
        spec = std::sqrt(spec * g->dp());
        const double phys = l2_norm(f);
        CHECK(std::abs(spec - phys) / phys < 1e-10);
    }

    TEST_CASE("constant field concentrates at the lowest cosine mode") {
        auto g = make_grid(10.0, 63);
        ComplexField f(g);
        for (auto& v : f.values()) v = 1.0;
        ComplexField c = fourier_cosine(f, 1.0, 1.0);
        double rest = 0.0;
        for (std::size_t k = 1; k < c.size(); ++k) rest = std::max(rest, std::abs(c[k]));
        CHECK(std::abs(c[0]) > 1e3 * rest);
        // Parseval-style mass accounting: the DC bin carries everything
        const double phys2 = l2_norm(f) * l2_norm(f);
        const double dc2 = 0.5 * std::norm(c[0]) * g->dp();
        CHECK(std::abs(dc2 - phys2 - g->dx()) / phys2 < 1e-10);  // boundary halves add one dx
    }

    TEST_CASE("cosine round trip on a smooth field") {
        auto g = make_grid(40.0, 511);
        ComplexField f(g);
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j);
            f[j] = std::exp(-0.5 * (x - 17.0) * (x - 17.0)) +
                   std::exp(-0.5 * (x + 17.0) * (x + 17.0));
        }
        ComplexField rt = fourier_cosine(fourier_cosine(f));
        CHECK(rel_l2_distance(rt, f) < 1e-10);
    }

    TEST_CASE("representation tags are enforced") {
        auto g = make_grid(40.0, 63);
        ComplexField f(g);
        ComplexField s = fourier_sine(f);
        CHECK(s.rep() == Rep::sine_spectral);
        CHECK_THROWS_AS(fourier_cosine(s), UsageError);
        CHECK_THROWS_AS(spectral_derivative(s), UsageError);
    }

    TEST_CASE("spectral derivative: lifted accuracy for f(0) != 0") {
        auto g = make_grid(40.0, 2047);
        ComplexField f(g);
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j);
            f[j] = std::exp(-x) + cplx(0.0, 1.0) * std::exp(-0.5 * (x - 8.0) * (x - 8.0));
        }
        ComplexField d = spectral_derivative(f);
        double worst = 0.0;
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j);
            const cplx exact = -std::exp(-x) -
                               cplx(0.0, 1.0) * (x - 8.0) * std::exp(-0.5 * (x - 8.0) * (x - 8.0));
            worst = std::max(worst, std::abs(d[j] - exact));
        }
        CHECK(worst < 1e-8);
    }

    TEST_CASE("second derivative matches on a Gaussian") {
        auto g = make_grid(40.0, 1023);
        ComplexField f(g);
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j);
            f[j] = std::exp(-0.5 * (x - 10.0) * (x - 10.0));
        }
        ComplexField d2 = spectral_second_derivative(f);
        double worst = 0.0;
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j), s = x - 10.0;
            worst = std::max(worst, std::abs(d2[j] - (s * s - 1.0) * std::exp(-0.5 * s * s)));
        }
        CHECK(worst < 1e-8);
    }
}
