#pragma once

#include <complex>
#include <stdexcept>

#include "hopf/hermitian2.hpp"

namespace hopf {

/// Moduli of a class-1 primary Hopf surface. Only the absolute values of the
/// deck parameters enter any of the metrics here, so phases are not stored.
/// Invariants: 1 < abs_alpha <= abs_beta, k1 + k2 = 1, 0 < k1 <= 1/2 <= k2 < 1,
/// period_L = log(abs_alpha * abs_beta) > 0.
struct HopfModuli {
    double abs_alpha = 0.0;
    double abs_beta = 0.0;
    double k1 = 0.0;  // log|alpha| / (log|alpha| + log|beta|)
    double k2 = 0.0;  // log|beta|  / (log|alpha| + log|beta|)
    double period_L = 0.0;

    bool round() const { return abs_alpha == abs_beta; }
};

/// A point of C^2 \ {0} where tensors are evaluated.
struct AmbientPoint {
    complexd z1{0.0, 0.0};
    complexd z2{0.0, 0.0};
};

/// Cohomogeneity-one coordinates on the quotient: u = log Phi (mod period_L as
/// a grid coordinate) and sigma = |z1|^2 Phi^{-2 k1} in [0, 1].
struct ReducedCoord {
    double u = 0.0;
    double sigma = 0.0;
};

/// Validates 1 < abs_alpha <= abs_beta and fills in the derived constants.
HopfModuli make_moduli(double abs_alpha, double abs_beta);

/// The unique s > 0 with |z1|^2 s^{-2 k1} + |z2|^2 s^{-2 k2} = 1. The defining
/// map is strictly decreasing in s, so a bracketed Newton iteration converges
/// globally; relative residual of the relation is < 1e-13.
double solve_phi(const HopfModuli& m, const AmbientPoint& p);

/// Z = 2 (k1 |z1|^2 Phi^{-2 k1} + k2 |z2|^2 Phi^{-2 k2}), in [2 k1, 2 k2].
/// Invariant under the deck action, so it descends to the quotient.
double z_function(const HopfModuli& m, const AmbientPoint& p);

/// Z as a function of sigma alone: Z = 2 (k2 - (k2 - k1) sigma).
double z_of_sigma(const HopfModuli& m, double sigma);

ReducedCoord reduced_from_ambient(const HopfModuli& m, const AmbientPoint& p);

/// Real-nonnegative representative of (u, sigma):
/// log z1 = k1 u + log(sigma)/2, log z2 = k2 u + log(1-sigma)/2.
/// Endpoints sigma in {0, 1} map to the axis points.
AmbientPoint ambient_from_reduced(const HopfModuli& m, const ReducedCoord& rc);

/// One application of the deck transformation, moduli only: (|a| z1, |b| z2).
/// Scales Phi by abs_alpha * abs_beta and leaves Z unchanged.
AmbientPoint deck_scale(const HopfModuli& m, const AmbientPoint& p);

}  // namespace hopf
