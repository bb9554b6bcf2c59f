#include "halfline/transforms.hpp"

#include <cmath>

#include "halfline/fft.hpp"

namespace halfline {

namespace {

constexpr double kSqrt2OverPi = 0.79788456080286535587989211986876373;  // sqrt(2/pi)

// Complex DST-I via two real transforms; out[k] = 2 sum_j in[j] sin(pi j k/(N+1)).
void dst1_complex(const std::vector<cplx>& in, std::vector<cplx>& out) {
    const std::size_t n = in.size();
    std::vector<double> re(n), im(n), tre(n), tim(n);
    for (std::size_t j = 0; j < n; ++j) {
        re[j] = in[j].real();
        im[j] = in[j].imag();
    }
    detail::dst1(re.data(), tre.data(), n);
    detail::dst1(im.data(), tim.data(), n);
    out.resize(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = cplx(tre[k], tim[k]);
}

// Complex extended DCT-I; in and out have n+2 entries (indices 0..n+1).
void dct1_complex(const std::vector<cplx>& in, std::vector<cplx>& out) {
    const std::size_t m = in.size();
    const std::size_t n = m - 2;
    std::vector<double> re(m), im(m), tre(m), tim(m);
    for (std::size_t j = 0; j < m; ++j) {
        re[j] = in[j].real();
        im[j] = in[j].imag();
    }
    detail::dct1_ext(re.data(), tre.data(), n);
    detail::dct1_ext(im.data(), tim.data(), n);
    out.resize(m);
    for (std::size_t k = 0; k < m; ++k) out[k] = cplx(tre[k], tim[k]);
}

}  // namespace

std::vector<cplx> sine_analysis(const Grid& g, const std::vector<cplx>& physical) {
    std::vector<cplx> t;
    dst1_complex(physical, t);
    const double c = 0.5 * kSqrt2OverPi * g.dx();
    for (auto& v : t) v *= c;
    return t;
}

std::vector<cplx> sine_synthesis(const Grid& g, const std::vector<cplx>& coeffs) {
    std::vector<cplx> t;
    dst1_complex(coeffs, t);
    const double c = 0.5 * kSqrt2OverPi * g.dp();
    for (auto& v : t) v *= c;
    return t;
}

ComplexField fourier_sine(const ComplexField& f) {
    const Grid& g = f.grid();
    if (f.rep() == Rep::physical) {
        ComplexField out(f.grid_ptr(), sine_analysis(g, f.values()), Rep::sine_spectral, f.time());
        return out;
    }
    if (f.rep() == Rep::sine_spectral) {
        ComplexField out(f.grid_ptr(), sine_synthesis(g, f.values()), Rep::physical, f.time());
        return out;
    }
    throw UsageError("fourier_sine: field must be physical or sine_spectral");
}

ComplexField fourier_cosine(const ComplexField& f, cplx f_left, cplx f_right) {
    const Grid& g = f.grid();
    const std::size_t n = g.size();
    if (f.rep() == Rep::physical) {
        std::vector<cplx> ext(n + 2);
        ext[0] = f_left;
        for (std::size_t j = 0; j < n; ++j) ext[j + 1] = f[j];
        ext[n + 1] = f_right;
        std::vector<cplx> t;
        dct1_complex(ext, t);
        const double c = 0.5 * kSqrt2OverPi * g.dx();
        std::vector<cplx> out(n);
        for (std::size_t k = 0; k < n; ++k) out[k] = c * t[k];
        return ComplexField(f.grid_ptr(), std::move(out), Rep::cosine_spectral, f.time());
    }
    if (f.rep() == Rep::cosine_spectral) {
        std::vector<cplx> ext(n + 2, cplx(0.0, 0.0));
        for (std::size_t k = 0; k < n; ++k) ext[k] = f[k];
        std::vector<cplx> t;
        dct1_complex(ext, t);
        const double c = 0.5 * kSqrt2OverPi * g.dp();
        std::vector<cplx> out(n);
        for (std::size_t j = 0; j < n; ++j) out[j] = c * t[j + 1];
        return ComplexField(f.grid_ptr(), std::move(out), Rep::physical, f.time());
    }
    throw UsageError("fourier_cosine: field must be physical or cosine_spectral");
}

cplx extrapolate_to_origin(const ComplexField& f) {
    f.require(Rep::physical, "extrapolate_to_origin");
    return wall_value(f);
}

namespace {

// Exponential wall lift c1 e^{-x} + c2 e^{-2x} + c3 e^{-3x} matching value,
// curvature and fourth derivative at 0+ (odd orders are free: the odd
// extension absorbs them).  The remainder's odd extension is then C^5, so
// the sine-interpolant derivative converges like N^{-5}.
struct WallLift {
    cplx c1{0.0, 0.0}, c2{0.0, 0.0}, c3{0.0, 0.0};
    static WallLift fit(const ComplexField& f) {
        const auto jet = wall_jet(f);
        const cplx f0 = jet[0], f2 = jet[2], f4 = jet[4];
        WallLift w;  // inverse Vandermonde in the squared decay rates 1, 4, 9
        w.c1 = (180.0 * f0 - 65.0 * f2 + 5.0 * f4) / 120.0;
        w.c2 = (-72.0 * f0 + 80.0 * f2 - 8.0 * f4) / 120.0;
        w.c3 = (12.0 * f0 - 15.0 * f2 + 3.0 * f4) / 120.0;
        return w;
    }
    cplx value(double x) const {
        return c1 * std::exp(-x) + c2 * std::exp(-2.0 * x) + c3 * std::exp(-3.0 * x);
    }
    cplx d1(double x) const {
        return -c1 * std::exp(-x) - 2.0 * c2 * std::exp(-2.0 * x) - 3.0 * c3 * std::exp(-3.0 * x);
    }
    cplx d2(double x) const {
        return c1 * std::exp(-x) + 4.0 * c2 * std::exp(-2.0 * x) + 9.0 * c3 * std::exp(-3.0 * x);
    }
};

}  // namespace

ComplexField spectral_derivative(const ComplexField& f, cplx* boundary_value) {
    f.require(Rep::physical, "spectral_derivative");
    const Grid& g = f.grid();
    const std::size_t n = g.size();

    const WallLift lift = WallLift::fit(f);
    std::vector<cplx> work(n);
    for (std::size_t j = 0; j < n; ++j) work[j] = f[j] - lift.value(g.node(j));

    std::vector<cplx> a = sine_analysis(g, work);

    // d/dx of the sine series is a cosine series on the same p_k; synthesize
    // it on the extended node range so the j = 0 slot gives the wall value.
    std::vector<cplx> cos_in(n + 2, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) cos_in[k + 1] = a[k] * g.wavenumber(k);
    std::vector<cplx> cos_out;
    dct1_complex(cos_in, cos_out);
    const double c = 0.5 * kSqrt2OverPi * g.dp();

    ComplexField out(f.grid_ptr(), f.rep(), f.time());
    for (std::size_t j = 0; j < n; ++j) out[j] = c * cos_out[j + 1] + lift.d1(g.node(j));
    if (boundary_value) *boundary_value = c * cos_out[0] + lift.d1(0.0);
    return out;
}

ComplexField spectral_second_derivative(const ComplexField& f) {
    f.require(Rep::physical, "spectral_second_derivative");
    const Grid& g = f.grid();
    const std::size_t n = g.size();

    const WallLift lift = WallLift::fit(f);
    std::vector<cplx> work(n);
    for (std::size_t j = 0; j < n; ++j) work[j] = f[j] - lift.value(g.node(j));

    std::vector<cplx> a = sine_analysis(g, work);
    for (std::size_t k = 0; k < n; ++k) a[k] *= -g.wavenumber(k) * g.wavenumber(k);
    std::vector<cplx> d2 = sine_synthesis(g, a);

    ComplexField out(f.grid_ptr(), f.rep(), f.time());
    for (std::size_t j = 0; j < n; ++j) out[j] = d2[j] + lift.d2(g.node(j));
    return out;
}

std::vector<cplx> sine_series_at(const Grid& g, const std::vector<cplx>& coeffs,
                                 const std::vector<double>& points) {
    const std::size_t n = g.size();
    const double c = kSqrt2OverPi * g.dp();
    std::vector<cplx> out(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        // e^{i p_k y} by recurrence over k; p_k = k * dp.
        const cplx step = std::polar(1.0, g.dp() * points[i]);
        cplx rot = step;
        cplx acc(0.0, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            acc += coeffs[k] * rot.imag();
            rot *= step;
        }
        out[i] = c * acc;
    }
    return out;
}

std::vector<cplx> multiplier_table(const Grid& g, const std::function<cplx(double)>& mu) {
    const std::size_t m2 = 2 * (g.size() + 1);
    const double dp = g.dp();
    std::vector<cplx> table(m2);
    for (std::size_t m = 0; m < m2; ++m) {
        const double p = (m <= m2 / 2) ? dp * static_cast<double>(m)
                                       : dp * (static_cast<double>(m) - static_cast<double>(m2));
        table[m] = mu(p);
    }
    return table;
}

ComplexField apply_multiplier_table(const ComplexField& f, const std::vector<cplx>& table) {
    f.require(Rep::physical, "apply_multiplier");
    const Grid& g = f.grid();
    const std::size_t n = g.size();
    const std::size_t m2 = 2 * (n + 1);
    if (table.size() != m2) throw UsageError("apply_multiplier: table length mismatch");

    std::vector<cplx> buf(m2, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        buf[j + 1] = f[j];
        buf[m2 - 1 - j] = -f[j];
    }
    detail::cfft(buf.data(), m2, true);
    for (std::size_t m = 0; m < m2; ++m) buf[m] *= table[m];
    detail::cfft(buf.data(), m2, false);

    ComplexField out(f.grid_ptr(), f.rep(), f.time());
    const double scale = 1.0 / static_cast<double>(m2);
    for (std::size_t j = 0; j < n; ++j) out[j] = buf[j + 1] * scale;
    return out;
}

ComplexField apply_multiplier(const ComplexField& f, const std::function<cplx(double)>& mu) {
    return apply_multiplier_table(f, multiplier_table(f.grid(), mu));
}

}  // namespace halfline
