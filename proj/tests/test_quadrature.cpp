#include "doctest.h"

#include <cmath>

#include "halfline/boundary_solution.hpp"
#include "halfline/quadrature.hpp"

using namespace halfline;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_SUITE("quadrature") {
    TEST_CASE("gk15 on smooth integrands") {
        auto f = [](double x) { return cplx(std::exp(-x * x), std::sin(x)); };
        QuadResult r = adaptive_gk(f, 0.0, 3.0, 1e-13);
        const double re = 0.5 * std::sqrt(kPi) * std::erf(3.0);
        const double im = 1.0 - std::cos(3.0);
        CHECK(std::abs(r.value.real() - re) < 1e-12);
        CHECK(std::abs(r.value.imag() - im) < 1e-12);
    }

    TEST_CASE("fixed panels are exactly linear in the integrand") {
        auto f1 = [](double x) { return cplx(std::sin(3.0 * x) / (1.0 + x), 0.0); };
        auto f2 = [](double x) { return cplx(0.0, std::cos(5.0 * x) * std::exp(-0.1 * x)); };
        std::vector<double> bp;
        for (int i = 0; i <= 40; ++i) bp.push_back(0.25 * i);
        const cplx a = fixed_panels(f1, bp).value;
        const cplx b = fixed_panels(f2, bp).value;
        const cplx ab = fixed_panels([&](double x) { return f1(x) + f2(x); }, bp).value;
        CHECK(std::abs(ab - a - b) < 1e-15);
    }

    TEST_CASE("phase breakpoints bound the phase increment") {
        auto phase = [](double u) { return 0.5 * u * u; };
        auto bp = phase_breakpoints(1.0, 30.0, phase, kPi, 5.0);
        REQUIRE(bp.size() >= 3);
        for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
            CHECK(bp[i + 1] > bp[i]);
            CHECK(std::abs(phase(bp[i + 1]) - phase(bp[i])) <= kPi * 1.0001);
        }
        CHECK(bp.front() == 1.0);
        CHECK(bp.back() == 30.0);
    }

    TEST_CASE("linear-phase tail reproduces the Fresnel-type integral") {
        // int_0^inf e^{iu} u^{-1/2} du = sqrt(pi) e^{i pi/4}
        const double U = 200.0;
        // u = s^2 over [0,2], then pi-phase panels
        QuadResult head = adaptive_gk(
            [](double s) { return 2.0 * std::polar(1.0, s * s); }, 0.0, std::sqrt(2.0), 1e-12);
        std::vector<double> bp{2.0};
        double u = 2.0;
        while (u < U) bp.push_back(u = std::min(u + kPi, U));
        auto f = [](double x) { return std::polar(1.0, x) / std::sqrt(x); };
        QuadResult body = fixed_panels(f, bp);
        body.value += head.value;
        const cplx tail = linear_phase_tail(U, [](double uu) {
            std::array<cplx, 4> d;
            const double s = std::sqrt(uu);
            d[0] = 1.0 / s;
            d[1] = -0.5 / (s * uu);
            d[2] = 0.75 / (s * uu * uu);
            d[3] = -1.875 / (s * uu * uu * uu);
            return d;
        });
        const cplx exact = std::sqrt(kPi) * std::polar(1.0, kPi / 4.0);
        CHECK(std::abs(body.value + tail - exact) < 1e-9);
    }

    TEST_CASE("V(m): rotated Laplace-Fresnel integral") {
        CHECK(std::abs(fresnel_laplace_V(0.0) - 1.0) < 1e-12);
        const double m = 0.3;
        QuadResult direct = adaptive_gk(
            [m](double y) { return std::exp(-y) * std::polar(1.0, m * y * y); }, 0.0, 60.0,
            1e-13, 40);
        CHECK(std::abs(fresnel_laplace_V(m) - direct.value) < 1e-10);
        const double M = 4096.0;
        const cplx asym =
            0.5 * std::sqrt(kPi / M) * std::polar(1.0, kPi / 4.0) - cplx(0.0, 0.5 / M);
        CHECK(std::abs(fresnel_laplace_V(M) - asym) < 1e-5);
    }

    TEST_CASE("adaptive_gk reports failure at the depth cap") {
        auto nasty = [](double x) { return cplx(std::cos(1.0 / (x + 1e-14)), 0.0); };
        CHECK_THROWS_AS(adaptive_gk(nasty, 0.0, 1.0, 1e-14, 4), NumericsError);
    }
}
