#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "halfline/errors.hpp"

namespace halfline {

// Uniform truncation of the half-line to (0, L) with N interior nodes
//   x_j = j*dx,       j = 1..N,   dx = L/(N+1),
// and the matching DST-I wavenumbers
//   p_k = k*pi/L,     k = 1..N.
// The raw sine transform implies homogeneous Dirichlet walls at x = 0 and
// x = L; everything that must not feel the artificial right wall monitors
// mass in the last 10% of the nodes (see Trajectory::truncation_contaminated).
//
// For fast transforms prefer N+1 = 2^k: the underlying real transforms have
// logical length 2(N+1).
class Grid {
  public:
    Grid(double length, std::size_t n_points) : length_(length), n_(n_points) {
        if (!(length > 0.0)) throw ConfigError("grid length must be positive");
        if (n_points < 8) throw ConfigError("grid needs at least 8 interior nodes");
        dx_ = length_ / static_cast<double>(n_ + 1);
        dp_ = pi() / length_;
        nodes_.resize(n_);
        wavenumbers_.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) nodes_[j] = static_cast<double>(j + 1) * dx_;
        for (std::size_t k = 0; k < n_; ++k) wavenumbers_[k] = static_cast<double>(k + 1) * dp_;
    }

    double length() const { return length_; }
    std::size_t size() const { return n_; }
    double dx() const { return dx_; }
    double dp() const { return dp_; }
    double node(std::size_t j) const { return nodes_[j]; }
    double wavenumber(std::size_t k) const { return wavenumbers_[k]; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& wavenumbers() const { return wavenumbers_; }

    bool same_layout(const Grid& other) const {
        return n_ == other.n_ && length_ == other.length_;
    }

    static constexpr double pi() { return 3.141592653589793238462643383279502884; }

  private:
    double length_;
    std::size_t n_;
    double dx_;
    double dp_;
    std::vector<double> nodes_;
    std::vector<double> wavenumbers_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr make_grid(double length, std::size_t n_points) {
    return std::make_shared<const Grid>(length, n_points);
}

}  // namespace halfline
