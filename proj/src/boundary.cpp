#include "halfline/boundary.hpp"

#include <cmath>
#include <utility>

namespace halfline {

namespace {

// c4 tames the derivative-envelope constants of the theorem4 family; see the
// header.  sup_t of |h''| <t>^{1+g} / eps stays below 1 for gamma <= 1.
constexpr double kTheorem4Scale = 1.0 / 32.0;

}  // namespace

BoundaryData::BoundaryData(BoundaryFamily fam, Eval h, Eval dh, Eval d2h, std::string label,
                           double amplitude, double beta, double gamma)
    : family_(fam), h_(std::move(h)), h1_(std::move(dh)), h2_(std::move(d2h)),
      label_(std::move(label)), amplitude_(amplitude), beta_(beta), gamma_(gamma) {}

BoundaryData BoundaryData::zero() {
    auto z = [](double) { return cplx(0.0, 0.0); };
    return BoundaryData(BoundaryFamily::zero, z, z, z, "zero", 0.0, 0.0, 0.0);
}

BoundaryData BoundaryData::theorem4(double eps, double gamma) {
    const double a = 2.75 + gamma;
    const double c = kTheorem4Scale * eps;
    auto h = [c, a](double t) { return cplx(c * t * t * std::pow(1.0 + t, -a), 0.0); };
    auto dh = [c, a](double t) {
        return cplx(c * (2.0 * t * std::pow(1.0 + t, -a) - a * t * t * std::pow(1.0 + t, -a - 1.0)),
                    0.0);
    };
    auto d2h = [c, a](double t) {
        return cplx(c * (2.0 * std::pow(1.0 + t, -a) - 4.0 * a * t * std::pow(1.0 + t, -a - 1.0) +
                         a * (a + 1.0) * t * t * std::pow(1.0 + t, -a - 2.0)),
                    0.0);
    };
    return BoundaryData(BoundaryFamily::theorem4_class, h, dh, d2h, "theorem4", eps, 0.75 + gamma,
                        gamma);
}

namespace {

// t (1+t)^{-1-b} and its two derivatives, scaled.
BoundaryData power_profile(BoundaryFamily fam, const char* label, double amp, double b,
                           double gamma, double remainder_amp, double remainder_gamma) {
    auto term = [](double c, double a) {
        return [c, a](double t) { return c * t * std::pow(1.0 + t, -1.0 - a); };
    };
    auto dterm = [](double c, double a) {
        return [c, a](double t) {
            return c * (std::pow(1.0 + t, -1.0 - a) - (1.0 + a) * t * std::pow(1.0 + t, -2.0 - a));
        };
    };
    auto d2term = [](double c, double a) {
        return [c, a](double t) {
            return c * (-2.0 * (1.0 + a) * std::pow(1.0 + t, -2.0 - a) +
                        (1.0 + a) * (2.0 + a) * t * std::pow(1.0 + t, -3.0 - a));
        };
    };
    // remainder profile t (1+t)^{-2-gamma} = term with a = 1+gamma
    auto f0 = term(amp, b), r0 = term(remainder_amp, 1.0 + remainder_gamma);
    auto f1 = dterm(amp, b), r1 = dterm(remainder_amp, 1.0 + remainder_gamma);
    auto f2 = d2term(amp, b), r2 = d2term(remainder_amp, 1.0 + remainder_gamma);
    auto h = [f0, r0](double t) { return cplx(f0(t) + r0(t), 0.0); };
    auto dh = [f1, r1](double t) { return cplx(f1(t) + r1(t), 0.0); };
    auto d2h = [f2, r2](double t) { return cplx(f2(t) + r2(t), 0.0); };
    return BoundaryData(fam, h, dh, d2h, label, amp, b, gamma);
}

}  // namespace

BoundaryData BoundaryData::theorem7(double eps, double beta) {
    return power_profile(BoundaryFamily::theorem7_class, "theorem7", eps, beta, 0.0, 0.0, 1.0);
}

BoundaryData BoundaryData::theorem8(double A, double beta, double remainder_amp,
                                    double remainder_gamma) {
    return power_profile(BoundaryFamily::theorem8_profile, "theorem8", A, beta, remainder_gamma,
                         remainder_amp, remainder_gamma);
}

BoundaryData BoundaryData::single_frequency(double omega, double amp) {
    // phase e^{-i omega t}: under the free multiplier e^{-i p^2 t/2} this
    // forcing resonates with the travelling mode p = sqrt(2 omega)
    auto h = [omega, amp](double t) {
        return amp * (1.0 - std::exp(-t)) * std::polar(1.0, -omega * t);
    };
    auto dh = [omega, amp](double t) {
        const cplx ph = std::polar(1.0, -omega * t);
        return amp * (std::exp(-t) - cplx(0.0, omega) * (1.0 - std::exp(-t))) * ph;
    };
    auto d2h = [omega, amp](double t) {
        const cplx ph = std::polar(1.0, -omega * t);
        const cplx iw(0.0, omega);
        return amp * ((-1.0 - 2.0 * iw) * std::exp(-t) - omega * omega * (1.0 - std::exp(-t))) *
               ph;
    };
    return BoundaryData(BoundaryFamily::single_frequency, h, dh, d2h, "single-frequency", amp,
                        0.0, 0.0);
}

BoundaryData BoundaryData::custom(Eval h, Eval dh, Eval d2h, std::string label) {
    return BoundaryData(BoundaryFamily::custom, std::move(h), std::move(dh), std::move(d2h),
                        std::move(label), 1.0, 0.0, 0.0);
}

cplx BoundaryData::h3(double t) const {
    const double d = std::min(1e-3, 0.5 * t + 5e-4);
    if (t < d) return (h2_(t + d) - h2_(t)) / d;
    return (h2_(t + d) - h2_(t - d)) / (2.0 * d);
}

}  // namespace halfline
