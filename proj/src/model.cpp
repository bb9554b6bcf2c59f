#include "halfline/model.hpp"

#include <cmath>

namespace halfline {

ComplexField nonlinearity(const ComplexField& u, const ModelParams& params) {
    u.require(Rep::physical, "nonlinearity");
    ComplexField out = u;
    if (params.lambda == cplx(0.0, 0.0)) {
        for (auto& v : out.values()) v = cplx(0.0, 0.0);
        return out;
    }
    if (params.p == 3.0) {
        for (auto& v : out.values()) v *= params.lambda * std::norm(v);
    } else {
        const double q = params.p - 1.0;
        for (auto& v : out.values()) {
            const double m = std::abs(v);
            v *= params.lambda * (m > 0.0 ? std::pow(m, q) : 0.0);
        }
    }
    return out;
}

namespace {

double gaussian(double x, double a, double w) {
    const double d = (x - a) / w;
    return std::exp(-0.5 * d * d);
}

}  // namespace

ComplexField make_initial_datum(GridPtr g, const std::string& family, double eps, double width,
                                double center) {
    ComplexField u0(g, Rep::physical, 0.0);
    if (family == "zero") return u0;
    if (family == "gaussian-odd") {
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j);
            u0[j] = eps * (gaussian(x, center, width) - gaussian(x, -center, width));
        }
        return u0;
    }
    if (family == "bump2") {
        for (std::size_t j = 0; j < g->size(); ++j) {
            const double x = g->node(j);
            const double d = x / width;
            u0[j] = eps * x * x * std::exp(-d * d);
        }
        return u0;
    }
    throw ConfigError("unknown initial datum family '" + family + "'");
}

cplx free_gaussian_pair_at(double t, double x, double eps, double width, double center) {
    // exp(-(x-a)^2/(2 s^2)) evolves to s/sqrt(s^2+it) exp(-(x-a)^2/(2(s^2+it)))
    const cplx s2it(width * width, t);
    const cplx pref = width / std::sqrt(s2it);
    auto branch = [&](double a) {
        return pref * std::exp(-(x - a) * (x - a) / (2.0 * s2it));
    };
    return eps * (branch(center) - branch(-center));
}

}  // namespace halfline
