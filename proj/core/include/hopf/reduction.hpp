#pragma once

#include <vector>

#include "hopf/geometry.hpp"
#include "hopf/grid.hpp"
#include "hopf/hermitian2.hpp"
#include "hopf/tensors.hpp"

namespace hopf {

/// First and second derivatives of the chart (u, sigma) with respect to
/// x = (log|z1|, log|z2|). Both depend on sigma only:
///   du/dx1 = 2 sigma / Z,           du/dx2 = 2 (1-sigma) / Z,
///   dsigma/dx1 = 4 k2 sigma (1-sigma) / Z,
///   dsigma/dx2 = -4 k1 sigma (1-sigma) / Z.
/// Second derivatives follow from d/dx_b = (dsigma/dx_b) d/dsigma.
struct ChartJacobians {
    double du_dx[2];
    double dsigma_dx[2];
    double d2u_dx[3];      // (x1x1, x1x2, x2x2)
    double d2sigma_dx[3];  // (x1x1, x1x2, x2x2)
};

ChartJacobians chart_jacobians(const HopfModuli& m, const ReducedCoord& rc);

/// Per-grid-point geometry precomputed once per (moduli, grid): the reference
/// tensors at the real-positive representatives and the coefficient maps that
/// turn grid derivatives of a torus-invariant potential into the components of
/// its complex Hessian,
///   (ddbar phi)_{ij} = e^{-x_i-x_j} (H_x)_{ij} / 4   (real at these points).
/// Entry order for coefficient arrays: multiply (phi_uu, phi_usigma,
/// phi_sigmasigma, phi_u, phi_sigma) and sum.
struct FlowGeometry {
    HopfModuli moduli;
    GridSpec grid;

    // Hessian coefficient maps, one set per Hermitian entry (11, 12, 22).
    std::vector<double> c11[5], c12[5], c22[5];

    // ghat and 2(Theta - ghat): the reference family is base(t) = ghat + t * dd.
    std::vector<double> g0_11, g0_12, g0_22;
    std::vector<double> dd_11, dd_12, dd_22;

    std::vector<double> two_u;               // -log det chi at the point
    std::vector<double> log_z;
    std::vector<double> chi_inv1, chi_inv2;  // Phi^{2 k1}, Phi^{2 k2}
    std::vector<double> vq11, vq12, vq22;    // u-circle tangent v contracted: g(v, vbar)
    std::vector<double> vol_w;               // e^{2u} Z quadrature weight

    static FlowGeometry build(const HopfModuli& m, const GridSpec& grid);
};

/// Grid first/second derivatives of a field at one point: periodic central
/// stencils in u, central stencils in sigma with quadratic one-sided
/// extrapolation ghosts at the boundary cells.
struct GridDerivs {
    double fu, fs, fuu, fus, fss;
};
GridDerivs grid_derivs(const GridSpec& g, const std::vector<double>& f, int i, int j);

/// i ddbar phi at grid point (i, j) for torus-invariant phi given on the grid.
/// Exactly zero for constant fields; exact through the chart for fields linear
/// in u away from the periodic seam.
Hermitian2 reduced_complex_hessian(const FlowGeometry& geo,
                                   const std::vector<double>& phi, int i, int j);

}  // namespace hopf
