#include "halfline/boundary_solution.hpp"

#include <cmath>

#include "halfline/evolution.hpp"
#include "halfline/fft.hpp"
#include "halfline/transforms.hpp"

namespace halfline {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const cplx kInvSqrt2iPi = 1.0 / std::sqrt(cplx(0.0, 2.0 * kPi));  // 1/sqrt(2 i pi)

// phi(u) = u^{-1/2} h(t - x^2/(2u)) and its first three u-derivatives,
// written through tau = x^2/(2u) and H_m = h^{(m)}(t - tau).
std::array<cplx, 4> zd_phi_derivs(const BoundaryData& h, double t, double x, double u) {
    const double tau = 0.5 * x * x / u;
    const double s = t - tau;
    const cplx H0 = h.h(s), H1 = h.h1(s), H2 = h.h2(s), H3 = h.h3(s);
    const double u12 = std::sqrt(u);
    std::array<cplx, 4> d;
    d[0] = H0 / u12;
    d[1] = (tau * H1 - 0.5 * H0) / (u12 * u);
    d[2] = (0.75 * H0 - 3.0 * tau * H1 + tau * tau * H2) / (u12 * u * u);
    d[3] = (-1.875 * H0 + 11.25 * tau * H1 - 7.5 * tau * tau * H2 + tau * tau * tau * H3) /
           (u12 * u * u * u);
    return d;
}

}  // namespace

cplx z_dirichlet_at(const BoundaryData& h, double t, double x) {
    if (!(t > 0.0)) throw UsageError("z_dirichlet_at: requires t > 0");
    if (!(x > 0.0)) throw UsageError("z_dirichlet_at: requires x > 0");
    if (h.is_zero()) return cplx(0.0, 0.0);

    const double u_min = 0.5 * x * x / t;
    // push the IBP tail start well past u_min so the composed h(t - x^2/2u)
    // has settled; its u-scale of variation is u_min itself
    const double u_tail = std::max(2.0 * u_min, 450.0);

    auto integrand = [&](double u) -> cplx {
        const double tau = 0.5 * x * x / u;
        return std::polar(1.0, u) * h.h(t - tau) / std::sqrt(u);
    };

    // geometric panels through the u^{-1/2} corner, then phase panels of pi
    std::vector<double> bp{u_min};
    double u = u_min;
    const double step0 = std::max(u_min, 1e-8);
    for (double w = step0; u + w < std::min(u_min + 4.0, u_tail); w *= 2.0) {
        u += w;
        bp.push_back(u);
    }
    while (u < u_tail) {
        u = std::min(u + kPi, u_tail);
        bp.push_back(u);
    }

    QuadResult body = fixed_panels(integrand, bp);
    const cplx tail =
        linear_phase_tail(u_tail, [&](double uu) { return zd_phi_derivs(h, t, x, uu); });

    return std::sqrt(2.0) * kInvSqrt2iPi * (body.value + tail);
}

ComplexField z_exact(const BoundaryData& h, double t, GridPtr g, const OperatorParams& op) {
    if (!(t > 0.0)) throw UsageError("z_exact: requires t > 0");
    ComplexField zd(g, Rep::physical, t);
    if (h.is_zero()) return zd;

    const std::size_t n = g->size();
    for (std::size_t j = 0; j < n; ++j) zd[j] = z_dirichlet_at(h, t, g->node(j));

    // Split off the wall jump z_D(t,0+) = h(t) and the curvature kink with
    // two exponentials mapped by B^{-1} in closed form (e^{-kx} ->
    // e^{-kx}/(1-k alpha)); the remainder's odd extension is C^3 and its
    // band-limited B^{-1} converges fast.
    const auto jet = wall_jet(zd);
    const cplx c2 = (jet[2] - jet[0]) / 3.0;
    const cplx c1 = jet[0] - c2;
    ComplexField rem = zd;
    for (std::size_t j = 0; j < n; ++j) {
        const double x = g->node(j);
        rem[j] -= c1 * std::exp(-x) + c2 * std::exp(-2.0 * x);
    }
    ComplexField z = apply_B_inverse(rem, op);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = g->node(j);
        z[j] += c1 * std::exp(-x) / (1.0 - op.alpha) +
                c2 * std::exp(-2.0 * x) / (1.0 - 2.0 * op.alpha);
    }
    z.set_time(t);
    return z;
}

BoundaryHatState::BoundaryHatState(GridPtr g, BoundaryData h)
    : grid_(std::move(g)), h_(std::move(h)), hat_(grid_->size(), cplx(0.0, 0.0)) {}

void BoundaryHatState::advance(double dt) {
    if (!(dt > 0.0)) throw UsageError("BoundaryHatState::advance: dt must be positive");
    const double tn = time_ + dt;
    const cplx h0 = h_.h(tn), g1 = h_.h1(tn), g2 = h_.h2(tn), g3 = h_.h3(tn);
    const std::size_t n = grid_->size();
    const cplx i_over(0.0, 1.0 / std::sqrt(2.0 * kPi));
    for (std::size_t k = 0; k < n; ++k) {
        const double p = grid_->wavenumber(k);
        const cplx a(0.0, -0.5 * p * p);
        const auto phi = detail::phi_moments(a, dt);
        const cplx inc = h0 * phi[0] - g1 * phi[1] + 0.5 * g2 * phi[2] - g3 * phi[3] / 6.0;
        hat_[k] = hat_[k] * std::exp(a * dt) + i_over * p * inc;
    }
    time_ = tn;
}

ComplexField synthesize_with_boundary_lift(GridPtr g, const std::vector<cplx>& hat, cplx h_now,
                                           const OperatorParams& op, double time) {
    const std::size_t n = g->size();
    const double s2p = std::sqrt(2.0 / kPi);
    std::vector<cplx> rem(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = g->wavenumber(k);
        rem[k] = hat[k] - h_now * s2p * p / (1.0 + p * p);
    }
    ComplexField z = robin_inverse_synthesis(g, op.alpha, rem, time);
    const cplx lift = h_now / (1.0 - op.alpha);
    for (std::size_t j = 0; j < n; ++j) z[j] += lift * std::exp(-g->node(j));
    return z;
}

ComplexField synthesize_boundary_field(const BoundaryHatState& state, const OperatorParams& op) {
    return synthesize_with_boundary_lift(state.grid_ptr(), state.hat(),
                                         state.data().h(state.time()), op, state.time());
}

ComplexField z_spectral(const BoundaryData& h, double t, GridPtr g, const OperatorParams& op,
                        double dt_quad) {
    if (!(t > 0.0)) throw UsageError("z_spectral: requires t > 0");
    if (h.is_zero()) return ComplexField(g, Rep::physical, t);
    BoundaryHatState state(g, h);
    const int steps = std::max(1, static_cast<int>(std::ceil(t / dt_quad)));
    const double dt = t / steps;
    for (int i = 0; i < steps; ++i) state.advance(dt);
    return synthesize_with_boundary_lift(g, state.hat(), h.h(t), op, t);
}

cplx fresnel_laplace_V(double m) {
    if (m < 0.0) throw UsageError("fresnel_laplace_V: m must be >= 0");
    const cplx ray = std::polar(1.0, kPi / 4.0);
    auto f = [&](double r) { return std::exp(-ray * r + cplx(0.0, m) * (ray * r) * (ray * r)); };
    // |integrand| = exp(-r/sqrt(2) - m r^2); for large m the Gaussian factor
    // is a narrow spike, so seed the splitting at its scale.
    const double w = 1.0 / std::sqrt(1.0 + m);
    cplx total(0.0, 0.0);
    double a = 0.0;
    for (double b : {w, 8.0 * w, 42.0}) {
        if (b <= a) continue;
        total += adaptive_gk(f, a, b, 1e-14).value;
        a = b;
    }
    return ray * total;
}

BoundaryTraces z_traces(const BoundaryData& h, double t, const OperatorParams& op) {
    if (!(t > 0.0)) throw UsageError("z_traces: requires t > 0");
    BoundaryTraces tr{cplx(0, 0), cplx(0, 0), cplx(0, 0)};
    if (h.is_zero()) return tr;

    const double a = op.alpha;
    // z(t,0+) = sqrt(2/pi) e^{-i pi/4} / (i alpha) *
    //           int_0^sqrt(t) h(t - s^2) (1 - V(alpha^2/(2 s^2))) ds
    // (tau = s^2 removes the tau^{-1/2} endpoint).
    const cplx pref = std::sqrt(2.0 / kPi) * std::polar(1.0, -kPi / 4.0) / cplx(0.0, a);
    auto kernel = [&](double s) { return 1.0 - fresnel_laplace_V(0.5 * a * a / (s * s)); };

    QuadResult q0 = adaptive_gk([&](double s) { return h.h(t - s * s) * kernel(s); }, 0.0,
                                std::sqrt(t), 1e-12);
    QuadResult q1 = adaptive_gk([&](double s) { return h.h1(t - s * s) * kernel(s); }, 0.0,
                                std::sqrt(t), 1e-12);
    tr.z0 = pref * q0.value;
    tr.dzt0 = pref * q1.value;
    tr.dzx0 = (h.h(t) - tr.z0) / a;
    return tr;
}

namespace {

// S(s,x) = int_R e^{ipx - i p^2 s/2} / (1 + i alpha p) dp via the steepest
// descent ray q = e^{-i pi/4} r through the stationary point p* = x/s.
// For alpha > 0 with alpha x > s the pole at q = -x/s + i/alpha sits in the
// sector swept by the rotation and leaves a residue term (the Robin bound
// state e^{-x/alpha} with its e^{i s/(2 alpha^2)} phase).
cplx kernel_S_rotated(double s, double x, double alpha) {
    const cplx ray = std::polar(1.0, -kPi / 4.0);
    const double shift = x / s;
    auto f = [&](double r) -> cplx {
        const cplx q = ray * r;
        return std::exp(-0.5 * s * r * r) / (1.0 + cplx(0.0, alpha) * (q + shift));
    };
    const double R = 14.0 / std::sqrt(s);
    QuadResult q = adaptive_gk(f, -R, R, 1e-12);
    cplx val = std::polar(1.0, 0.5 * x * x / s) * ray * q.value;
    if (alpha > 0.0 && alpha * x > s)
        val += (2.0 * kPi / alpha) * std::exp(cplx(0.0, 0.5 * s / (alpha * alpha))) *
               std::exp(-x / alpha);
    return val;
}

}  // namespace

KernelSplit kernel_I(double s, double x, const OperatorParams& op) {
    if (!(s > 0.0)) throw UsageError("kernel_I: requires s > 0");
    if (!(x > 0.0)) throw UsageError("kernel_I: requires x > 0");
    const double a = op.alpha;
    const cplx gauss = std::sqrt(2.0 * kPi / s) * std::polar(1.0, -kPi / 4.0) *
                       std::polar(1.0, 0.5 * x * x / s);
    const cplx S = kernel_S_rotated(s, x, a);

    KernelSplit ks;
    ks.s = s;
    ks.x = x;
    ks.full = (gauss - S) / (2.0 * kPi * cplx(0.0, a));
    const double pstar = x / s;
    ks.leading = std::polar(1.0, -kPi / 4.0) / std::sqrt(2.0 * kPi * s) *
                 std::polar(1.0, 0.5 * x * x / s) * pstar / cplx(1.0, a * pstar);
    ks.remainder = ks.full - ks.leading;
    return ks;
}

cplx kernel_I_bruteforce(double s, double x, const OperatorParams& op) {
    const double a = op.alpha;
    auto g = [&](double p) { return p / cplx(1.0, a * p) / (2.0 * kPi); };
    auto dg = [&](double p) { return 1.0 / (cplx(1.0, a * p) * cplx(1.0, a * p)) / (2.0 * kPi); };
    auto phase = [&](double p) { return p * x - 0.5 * p * p * s; };
    auto f = [&](double p) { return std::polar(1.0, phase(p)) * g(p); };

    const double pstar = x / s;
    const double wing = 400.0 / std::sqrt(s);
    const double lo = pstar - wing, hi = pstar + wing;

    auto bp_right = phase_breakpoints(pstar, hi, phase, kPi, wing);
    auto bp_left = phase_breakpoints(lo, pstar, phase, kPi, wing);
    QuadResult body = fixed_panels(f, bp_left);
    QuadResult body2 = fixed_panels(f, bp_right);

    // two-term IBP tails; phi' = x - p s, psi = (g / (i phi'))'
    const cplx i(0.0, 1.0);
    auto edge = [&](double P) -> cplx {
        const double dphi = x - P * s;
        const cplx psi = dg(P) / (i * dphi) + g(P) * s / (i * dphi * dphi);
        return std::polar(1.0, phase(P)) / (i * dphi) * (g(P) - psi);
    };
    // right tail: -edge(hi); left tail: +edge(lo)
    return body.value + body2.value - edge(hi) + edge(lo);
}

ComplexField weighted_moment_xz(const BoundaryData& h, double t, GridPtr g,
                                const OperatorParams& op, double dt_quad) {
    if (!(t > 0.0)) throw UsageError("weighted_moment_xz: requires t > 0");
    ComplexField out(g, Rep::physical, t);
    if (h.is_zero()) return out;

    // March I_w(p) = int_0^t e^{-i p^2 tau/2} w(t-tau) d tau on the full
    // 2(N+1)-point wavenumber set for w in {h, h', s h'(s)}.
    const std::size_t n = g->size();
    const std::size_t m2 = 2 * (n + 1);
    const double dp = g->dp();
    std::vector<double> pfull(m2);
    for (std::size_t m = 0; m < m2; ++m)
        pfull[m] = (m <= m2 / 2) ? dp * static_cast<double>(m)
                                 : dp * (static_cast<double>(m) - static_cast<double>(m2));

    const int steps = std::max(1, static_cast<int>(std::ceil(t / dt_quad)));
    const double dt = t / steps;

    std::vector<cplx> Ih(m2, 0.0), Ih1(m2, 0.0), Ish1(m2, 0.0);
    auto advance = [&](std::vector<cplx>& I, auto w0, auto w1, auto w2, auto w3, double tn) {
        for (std::size_t m = 0; m < m2; ++m) {
            const cplx aa(0.0, -0.5 * pfull[m] * pfull[m]);
            const auto phi = detail::phi_moments(aa, dt);
            const cplx inc = w0(tn) * phi[0] - w1(tn) * phi[1] + 0.5 * w2(tn) * phi[2] -
                             w3(tn) * phi[3] / 6.0;
            I[m] = I[m] * std::exp(aa * dt) + inc;
        }
    };

    auto sh1 = [&](double s) { return s * h.h1(s); };
    auto sh1_d1 = [&](double s) { return h.h1(s) + s * h.h2(s); };
    auto sh1_d2 = [&](double s) { return 2.0 * h.h2(s) + s * h.h3(s); };
    auto sh1_d3 = [&](double s) { return 3.0 * h.h3(s); };  // h'''' dropped

    for (int i = 0; i < steps; ++i) {
        const double tn = (i + 1) * dt;
        advance(Ih, [&](double s) { return h.h(s); }, [&](double s) { return h.h1(s); },
                [&](double s) { return h.h2(s); }, [&](double s) { return h.h3(s); }, tn);
        advance(Ih1, [&](double s) { return h.h1(s); }, [&](double s) { return h.h2(s); },
                [&](double s) { return h.h3(s); }, [&](double) { return cplx(0.0, 0.0); }, tn);
        advance(Ish1, sh1, sh1_d1, sh1_d2, sh1_d3, tn);
    }

    // x z(x) = (i/2pi) int e^{ipx} [ Ih/(1+iap)^2 - 2 (Ih - t Ih' + Ish')/(1+iap) ] dp
    std::vector<cplx> sym(m2);
    for (std::size_t m = 0; m < m2; ++m) {
        const cplx den(1.0, op.alpha * pfull[m]);
        const cplx IG = Ih[m] - t * Ih1[m] + Ish1[m];
        sym[m] = Ih[m] / (den * den) - 2.0 * IG / den;
    }
    detail::cfft(sym.data(), m2, false);  // backward: sum e^{+ip x_j}
    const cplx pref = cplx(0.0, 1.0) / (2.0 * kPi) * dp;
    for (std::size_t j = 0; j < n; ++j) out[j] = pref * sym[j + 1];
    return out;
}

cplx halfline_oscillatory_integral(const BoundaryData& h, double omega, double t0) {
    if (!(omega > 0.0)) throw UsageError("halfline_oscillatory_integral: omega must be positive");
    const double s0 = omega * t0;
    const double s_cut = s0 + 100.0;

    auto f = [&](double s) { return std::polar(1.0, s) * h.h(s / omega); };
    std::vector<double> bp{s0};
    double s = s0;
    while (s < s_cut) {
        s = std::min(s + kPi, s_cut);
        bp.push_back(s);
    }
    QuadResult body = fixed_panels(f, bp);

    const cplx tail = linear_phase_tail(s_cut, [&](double ss) {
        std::array<cplx, 4> d;
        d[0] = h.h(ss / omega);
        d[1] = h.h1(ss / omega) / omega;
        d[2] = h.h2(ss / omega) / (omega * omega);
        d[3] = h.h3(ss / omega) / (omega * omega * omega);
        return d;
    });
    return (body.value + tail) / omega;
}

}  // namespace halfline
