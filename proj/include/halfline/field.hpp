#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <utility>
#include <vector>

#include "halfline/grid.hpp"

namespace halfline {

using cplx = std::complex<double>;

// Which expansion the stored samples belong to.
//   physical        values at the grid nodes x_j
//   sine_spectral   sine coefficients at p_k = k*pi/L, k = 1..N
//   cosine_spectral cosine coefficients at q_k = k*pi/L, k = 0..N-1
enum class Rep { physical, sine_spectral, cosine_spectral };

// A sampled complex field on a Grid at a fixed time.  Value-semantic; the
// grid is shared immutable state, so copies are cheap to pass across threads.
class ComplexField {
  public:
    ComplexField() = default;
    ComplexField(GridPtr grid, Rep rep = Rep::physical, double time = 0.0)
        : grid_(std::move(grid)), rep_(rep), time_(time), values_(grid_->size(), cplx(0.0, 0.0)) {}
    ComplexField(GridPtr grid, std::vector<cplx> values, Rep rep = Rep::physical, double time = 0.0)
        : grid_(std::move(grid)), rep_(rep), time_(time), values_(std::move(values)) {
        if (values_.size() != grid_->size()) throw UsageError("field length must equal grid size");
    }

    const Grid& grid() const { return *grid_; }
    GridPtr grid_ptr() const { return grid_; }
    Rep rep() const { return rep_; }
    double time() const { return time_; }
    void set_time(double t) { time_ = t; }
    void set_rep(Rep r) { rep_ = r; }

    std::size_t size() const { return values_.size(); }
    cplx& operator[](std::size_t j) { return values_[j]; }
    const cplx& operator[](std::size_t j) const { return values_[j]; }
    std::vector<cplx>& values() { return values_; }
    const std::vector<cplx>& values() const { return values_; }

    void require(Rep rep, const char* who) const {
        if (rep_ != rep) throw UsageError(std::string(who) + ": wrong field representation");
    }

  private:
    GridPtr grid_;
    Rep rep_ = Rep::physical;
    double time_ = 0.0;
    std::vector<cplx> values_;
};

// Trapezoid L^2 norm on (0,L); interior samples only, the implied
// boundary values are the transform convention's zeros.
inline double l2_norm(const ComplexField& f) {
    double s = 0.0;
    for (const auto& v : f.values()) s += std::norm(v);
    return std::sqrt(s * f.grid().dx());
}

inline double linf_norm(const ComplexField& f) {
    double m = 0.0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

inline double l2_distance(const ComplexField& a, const ComplexField& b) {
    if (a.size() != b.size()) throw UsageError("l2_distance: size mismatch");
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a[j] - b[j]);
    return std::sqrt(s * a.grid().dx());
}

inline double rel_l2_distance(const ComplexField& a, const ComplexField& b) {
    double den = l2_norm(b);
    if (den == 0.0) return l2_norm(a) == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return l2_distance(a, b) / den;
}

// One-sided polynomial extrapolation of a physical field to the wall x = 0+.
// Degree seven: the boundary value feeds the e^{-x} lift of the spectral
// derivative, where any value error is amplified by 1/dx.
inline cplx wall_value(const ComplexField& f) {
    static constexpr double w[8] = {8.0, -28.0, 56.0, -70.0, 56.0, -28.0, 8.0, -1.0};
    cplx v(0.0, 0.0);
    for (int j = 0; j < 8; ++j) v += w[j] * f[j];
    return v;
}

// Derivatives (f, f', f'', f''', f'''') at 0+ from the degree-nine Newton
// interpolant through the first ten nodes.  The even-order entries feed the
// exponential wall lift of the spectral derivative.
inline std::array<cplx, 5> wall_jet(const ComplexField& f) {
    constexpr int n = 10;
    const double dx = f.grid().dx();
    std::array<double, n> xs;
    std::array<cplx, n> c;
    for (int j = 0; j < n; ++j) {
        xs[j] = (j + 1) * dx;
        c[j] = f[j];
    }
    for (int lvl = 1; lvl < n; ++lvl)
        for (int j = n - 1; j >= lvl; --j) c[j] = (c[j] - c[j - 1]) / (xs[j] - xs[j - lvl]);
    std::array<cplx, 5> der{c[n - 1], cplx(0.0, 0.0), cplx(0.0, 0.0), cplx(0.0, 0.0),
                            cplx(0.0, 0.0)};
    for (int j = n - 2; j >= 0; --j) {
        const double w = -xs[j];
        for (int k = 4; k >= 1; --k) der[k] = der[k] * w + static_cast<double>(k) * der[k - 1];
        der[0] = der[0] * w + c[j];
    }
    return der;
}

// Value and slope at 0+ from a degree-five one-sided fit (nodes dx..6dx).
inline std::pair<cplx, cplx> wall_value_and_slope(const ComplexField& f) {
    static constexpr double w[6] = {6.0, -15.0, 20.0, -15.0, 6.0, -1.0};
    const double h6 = 1.0 + 0.5 + 1.0 / 3.0 + 0.25 + 0.2 + 1.0 / 6.0;  // harmonic H_6
    cplx v(0.0, 0.0), d(0.0, 0.0);
    for (int j = 0; j < 6; ++j) {
        v += w[j] * f[j];
        d += -w[j] * (h6 - 1.0 / (j + 1.0)) * f[j];
    }
    return {v, d / f.grid().dx()};
}

// Fraction of the field's mass sitting in the last 10% of the nodes.
// Used to flag runs where the artificial right wall starts to matter.
inline double tail_mass_fraction(const ComplexField& f) {
    const std::size_t n = f.size();
    const std::size_t start = n - n / 10;
    double tail = 0.0, total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double m = std::norm(f[j]);
        total += m;
        if (j >= start) tail += m;
    }
    return total > 0.0 ? tail / total : 0.0;
}

}  // namespace halfline
