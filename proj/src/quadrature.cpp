#include "halfline/quadrature.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "halfline/errors.hpp"

namespace halfline {

namespace {

// QUADPACK 15-point Kronrod nodes/weights with embedded 7-point Gauss rule.
constexpr std::array<double, 8> kron_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kron_w = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> gauss_w = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

}  // namespace

QuadResult gk15(const CIntegrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);

    std::array<cplx, 15> fv;
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kron_x[i]);
        fv[14 - i] = f(c + h * kron_x[i]);
    }
    fv[7] = f(c);

    cplx kron(0.0, 0.0), gauss(0.0, 0.0);
    for (int i = 0; i < 7; ++i) kron += kron_w[i] * (fv[i] + fv[14 - i]);
    kron += kron_w[7] * fv[7];
    // Gauss points are the odd-indexed Kronrod abscissae.
    for (int i = 0; i < 3; ++i) gauss += gauss_w[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    gauss += gauss_w[3] * fv[7];

    QuadResult r;
    r.value = kron * h;
    r.error = std::abs(kron - gauss) * std::abs(h);
    r.evals = 15;
    return r;
}

namespace {

void adaptive_rec(const CIntegrand& f, double a, double b, double tol, int depth,
                  QuadResult& acc) {
    QuadResult r = gk15(f, a, b);
    acc.evals += r.evals;
    if (r.error <= tol || depth <= 0) {
        if (r.error > tol)
            throw NumericsError("adaptive_gk: depth cap hit, est err " + std::to_string(r.error) +
                                " > tol " + std::to_string(tol));
        acc.value += r.value;
        acc.error += r.error;
        return;
    }
    const double c = 0.5 * (a + b);
    adaptive_rec(f, a, c, 0.5 * tol, depth - 1, acc);
    adaptive_rec(f, c, b, 0.5 * tol, depth - 1, acc);
}

}  // namespace

QuadResult adaptive_gk(const CIntegrand& f, double a, double b, double abs_tol, int max_depth) {
    QuadResult acc;
    if (a == b) return acc;
    adaptive_rec(f, a, b, abs_tol, max_depth, acc);
    return acc;
}

QuadResult fixed_panels(const CIntegrand& f, const std::vector<double>& breakpoints) {
    QuadResult acc;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        QuadResult r = gk15(f, breakpoints[i], breakpoints[i + 1]);
        acc.value += r.value;
        acc.error += r.error;
        acc.evals += r.evals;
    }
    return acc;
}

std::vector<double> phase_breakpoints(double a, double b,
                                      const std::function<double(double)>& phase,
                                      double max_phase, double max_len) {
    std::vector<double> bp{a};
    double u = a;
    // March by inverting the local phase rate; bisect when the step overshoots.
    while (u < b) {
        double lo = u, hi = std::min(b, u + max_len);
        const double ph_u = phase(u);
        if (std::abs(phase(hi) - ph_u) > max_phase) {
            for (int it = 0; it < 50; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (std::abs(phase(mid) - ph_u) > max_phase)
                    hi = mid;
                else
                    lo = mid;
            }
        }
        u = hi;
        bp.push_back(u);
    }
    bp.back() = b;
    return bp;
}

cplx linear_phase_tail(double U, const std::function<std::array<cplx, 4>(double)>& derivs) {
    const std::array<cplx, 4> d = derivs(U);
    const cplx eiU = std::polar(1.0, U);
    const cplx i(0.0, 1.0);
    cplx sum(0.0, 0.0);
    cplx ipow = i;  // i^{m+1}
    double sign = 1.0;
    for (int m = 0; m < 4; ++m) {
        sum += sign * d[m] / ipow;
        ipow *= i;
        sign = -sign;
    }
    return -eiU * sum;
}

}  // namespace halfline
