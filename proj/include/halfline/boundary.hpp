#pragma once

#include <functional>
#include <string>

#include "halfline/field.hpp"

namespace halfline {

enum class BoundaryFamily { zero, theorem4_class, theorem7_class, theorem8_profile,
                            single_frequency, custom };

// Boundary forcing h(t) with analytic first and second derivatives and the
// decay metadata the asymptotic checks need.  All families satisfy the
// corner compatibility h(0) = 0.
//
//   theorem4_class   h = c4 * eps * t^2 (1+t)^{-11/4-gamma}; the constant c4
//                    makes |h|, |h'|, |h''| obey the envelopes
//                    eps<t>^{-3/4-g}, eps<t>^{-7/4-g}, eps<t>^{-1-g}
//                    with constant one, and h'(0) = 0.
//   theorem7_class   h = eps * t (1+t)^{-1-beta},   |h| <= eps <t>^{-beta}
//   theorem8_profile h = A * t (1+t)^{-beta-1} [+ r * t (1+t)^{-2-gamma}]
//   single_frequency h = amp (1 - e^{-t}) e^{-i omega t}
class BoundaryData {
  public:
    using Eval = std::function<cplx(double)>;

    static BoundaryData zero();
    static BoundaryData theorem4(double eps, double gamma);
    static BoundaryData theorem7(double eps, double beta);
    static BoundaryData theorem8(double A, double beta, double remainder_amp = 0.0,
                                 double remainder_gamma = 1.0);
    static BoundaryData single_frequency(double omega, double amp = 1.0);
    static BoundaryData custom(Eval h, Eval dh, Eval d2h, std::string label = "custom");

    cplx h(double t) const { return h_(t); }
    cplx h1(double t) const { return h1_(t); }
    cplx h2(double t) const { return h2_(t); }
    // third derivative by central differencing of h'' (used by quadrature tails)
    cplx h3(double t) const;

    BoundaryFamily family() const { return family_; }
    const std::string& label() const { return label_; }
    double amplitude() const { return amplitude_; }
    double beta() const { return beta_; }
    double gamma() const { return gamma_; }
    bool is_zero() const { return family_ == BoundaryFamily::zero; }

    BoundaryData(BoundaryFamily fam, Eval h, Eval dh, Eval d2h, std::string label,
                 double amplitude, double beta, double gamma);

  private:
    BoundaryFamily family_;
    Eval h_, h1_, h2_;
    std::string label_;
    double amplitude_ = 0.0;
    double beta_ = 0.0;
    double gamma_ = 0.0;
};

}  // namespace halfline
