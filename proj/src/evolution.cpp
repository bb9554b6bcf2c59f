#include "halfline/evolution.hpp"

#include <cmath>

#include "halfline/fft.hpp"

namespace halfline {

namespace {
constexpr double kSqrt2OverPi = 0.79788456080286535587989211986876373;
}

ComplexField free_evolution_dirichlet(const ComplexField& f, double t) {
    f.require(Rep::physical, "free_evolution_dirichlet");
    if (t == 0.0) return f;
    const Grid& g = f.grid();
    std::vector<cplx> a = sine_analysis(g, f.values());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double p = g.wavenumber(k);
        a[k] *= std::polar(1.0, -0.5 * p * p * t);
    }
    return ComplexField(f.grid_ptr(), sine_synthesis(g, a), Rep::physical, f.time() + t);
}

ComplexField robin_inverse_synthesis(GridPtr gp, double alpha, const std::vector<cplx>& hat,
                                     double time) {
    const Grid& g = *gp;
    const std::size_t n = g.size();
    if (hat.size() != n) throw UsageError("robin_inverse_synthesis: hat length mismatch");

    std::vector<cplx> sin_coef(n), cos_ext(n + 2, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const double p = g.wavenumber(k);
        const double den = 1.0 + alpha * alpha * p * p;
        sin_coef[k] = hat[k] / den;
        cos_ext[k + 1] = -alpha * p * hat[k] / den;
    }
    std::vector<cplx> out = sine_synthesis(g, sin_coef);

    // cosine synthesis of the mixed part on interior nodes
    std::vector<double> re(n + 2), im(n + 2), tre(n + 2), tim(n + 2);
    for (std::size_t k = 0; k < n + 2; ++k) {
        re[k] = cos_ext[k].real();
        im[k] = cos_ext[k].imag();
    }
    detail::dct1_ext(re.data(), tre.data(), n);
    detail::dct1_ext(im.data(), tim.data(), n);
    const double c = 0.5 * kSqrt2OverPi * g.dp();
    for (std::size_t j = 0; j < n; ++j) out[j] += c * cplx(tre[j + 1], tim[j + 1]);

    return ComplexField(std::move(gp), std::move(out), Rep::physical, time);
}

ComplexField free_evolution_robin(const ComplexField& f, double t, const OperatorParams& op) {
    f.require(Rep::physical, "free_evolution_robin");
    if (t == 0.0) return f;
    const Grid& g = f.grid();
    ComplexField v = apply_B(f, op);
    std::vector<cplx> a = sine_analysis(g, v.values());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double p = g.wavenumber(k);
        a[k] *= std::polar(1.0, -0.5 * p * p * t);
    }
    return robin_inverse_synthesis(f.grid_ptr(), op.alpha, a, f.time() + t);
}

std::vector<cplx> sine_forward_at(const Grid& g, const std::vector<cplx>& physical,
                                  const std::vector<double>& freqs) {
    const std::size_t n = g.size();
    const double c = kSqrt2OverPi * g.dx();
    std::vector<cplx> out(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        const cplx step = std::polar(1.0, freqs[i] * g.dx());
        cplx rot = step;
        cplx acc(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            acc += physical[j] * rot.imag();
            rot *= step;
        }
        out[i] = c * acc;
    }
    return out;
}

ComplexField mdtfm_factorization(const ComplexField& f, double t, const OperatorParams& op) {
    f.require(Rep::physical, "mdtfm_factorization");
    if (!(t > 0.0)) throw UsageError("mdtfm_factorization: requires t > 0");
    const Grid& g = f.grid();
    const std::size_t n = g.size();

    ComplexField v = apply_B(f, op);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = g.node(j);
        v[j] *= std::polar(1.0, x * x / (2.0 * t));
    }

    // D_t resamples the sine transform at x_j / t (exact off-grid sums).
    std::vector<double> pts(n);
    for (std::size_t j = 0; j < n; ++j) pts[j] = g.node(j) / t;
    std::vector<cplx> shat = sine_forward_at(g, v.values(), pts);

    const cplx inv_sqrt_it = 1.0 / std::sqrt(cplx(0.0, t));
    ComplexField w(f.grid_ptr(), Rep::physical, f.time() + t);
    const cplx minus_i(0.0, -1.0);
    for (std::size_t j = 0; j < n; ++j) {
        const double x = g.node(j);
        w[j] = minus_i * std::polar(1.0, x * x / (2.0 * t)) * inv_sqrt_it * shat[j];
    }
    return apply_B_inverse(w, op);
}

namespace detail {

std::array<cplx, 4> phi_moments(cplx a, double dt) {
    std::array<cplx, 4> phi;
    if (std::abs(a) * dt < 0.5) {
        // int_0^dt s^m e^{as} ds = dt^{m+1} sum_j (a dt)^j / (j! (m+j+1))
        const cplx z = a * dt;
        for (int m = 0; m < 4; ++m) {
            cplx term(1.0, 0.0);
            cplx sum = term / static_cast<double>(m + 1);
            for (int j = 1; j < 26; ++j) {
                term *= z / static_cast<double>(j);
                sum += term / static_cast<double>(m + j + 1);
            }
            phi[m] = sum * std::pow(dt, m + 1);
        }
    } else {
        const cplx eat = std::exp(a * dt);
        phi[0] = (eat - 1.0) / a;
        double dtm = 1.0;
        for (int m = 1; m < 4; ++m) {
            dtm *= dt;
            phi[m] = (dtm * eat - static_cast<double>(m) * phi[m - 1]) / a;
        }
    }
    return phi;
}

}  // namespace detail

RobinPropagator::RobinPropagator(GridPtr grid, double alpha)
    : grid_(std::move(grid)), alpha_(alpha), op_(alpha) {}

std::vector<cplx> RobinPropagator::free_phase(double t) const {
    const std::size_t n = grid_->size();
    std::vector<cplx> ph(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = grid_->wavenumber(k);
        ph[k] = std::polar(1.0, -0.5 * p * p * t);
    }
    return ph;
}

void RobinPropagator::advance_hat(std::vector<cplx>& hat, const std::vector<cplx>& phase_dt) const {
    for (std::size_t k = 0; k < hat.size(); ++k) hat[k] *= phase_dt[k];
}

ComplexField RobinPropagator::hat_to_physical(const std::vector<cplx>& hat, double time) const {
    return robin_inverse_synthesis(grid_, alpha_, hat, time);
}

std::vector<cplx> RobinPropagator::hat_of_B(const ComplexField& f) const {
    ComplexField v = apply_B(f, op_);
    return sine_analysis(*grid_, v.values());
}

}  // namespace halfline
