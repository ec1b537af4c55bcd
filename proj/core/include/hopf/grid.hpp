#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hopf {

/// Discretization of the cylinder (u mod L) x [0,1]: u carries periodic nodes
/// u_i = i L / n_u, sigma carries cell centers sigma_j = (j + 1/2) / n_sigma so
/// no node lands on the degenerate ends sigma in {0, 1}.
struct GridSpec {
    int n_u = 64;
    int n_sigma = 64;
    double period_L = 0.0;

    double du() const { return period_L / n_u; }
    double dsigma() const { return 1.0 / n_sigma; }
    double u_node(int i) const { return i * du(); }
    double sigma_center(int j) const { return (j + 0.5) / n_sigma; }

    std::size_t size() const {
        return static_cast<std::size_t>(n_u) * static_cast<std::size_t>(n_sigma);
    }
    // Row-major in u: adjacent sigma cells are contiguous.
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * n_sigma + j;
    }

    void validate() const {
        if (n_u < 8 || n_sigma < 8)
            throw std::invalid_argument("grid: n_u and n_sigma must be >= 8");
        if (!(period_L > 0.0))
            throw std::invalid_argument("grid: period_L must be positive");
    }
};

}  // namespace hopf
