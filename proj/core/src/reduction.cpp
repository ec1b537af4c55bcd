#include "hopf/reduction.hpp"

#include <cmath>

namespace hopf {

ChartJacobians chart_jacobians(const HopfModuli& m, const ReducedCoord& rc) {
    const double s = rc.sigma;
    if (!(s > 0.0 && s < 1.0))
        throw std::invalid_argument("chart_jacobians: sigma must lie in (0, 1)");
    const double z = z_of_sigma(m, s);
    const double zp = -2.0 * (m.k2 - m.k1);  // dZ/dsigma
    const double ss = s * (1.0 - s);

    ChartJacobians j;
    j.du_dx[0] = 2.0 * s / z;
    j.du_dx[1] = 2.0 * (1.0 - s) / z;
    j.dsigma_dx[0] = 4.0 * m.k2 * ss / z;
    j.dsigma_dx[1] = -4.0 * m.k1 * ss / z;

    // d/dsigma of the first derivatives; Z - sigma Z' = 2 k2, Z + (1-sigma) Z' = 2 k1.
    const double a1p = 4.0 * m.k2 / (z * z);
    const double a2p = -4.0 * m.k1 / (z * z);
    const double c = (1.0 - 2.0 * s) * z - ss * zp;
    const double b1p = 4.0 * m.k2 * c / (z * z);
    const double b2p = -4.0 * m.k1 * c / (z * z);

    // d2u/dx_a dx_b = (dA_a/dsigma) dsigma/dx_b, symmetric in (a, b).
    j.d2u_dx[0] = a1p * j.dsigma_dx[0];
    j.d2u_dx[1] = a1p * j.dsigma_dx[1];  // == a2p * dsigma_dx[0]
    j.d2u_dx[2] = a2p * j.dsigma_dx[1];
    j.d2sigma_dx[0] = b1p * j.dsigma_dx[0];
    j.d2sigma_dx[1] = b1p * j.dsigma_dx[1];
    j.d2sigma_dx[2] = b2p * j.dsigma_dx[1];
    return j;
}

FlowGeometry FlowGeometry::build(const HopfModuli& m, const GridSpec& grid) {
    grid.validate();
    FlowGeometry geo;
    geo.moduli = m;
    geo.grid = grid;
    const std::size_t n = grid.size();
    for (int k = 0; k < 5; ++k) {
        geo.c11[k].resize(n);
        geo.c12[k].resize(n);
        geo.c22[k].resize(n);
    }
    geo.g0_11.resize(n);
    geo.g0_12.resize(n);
    geo.g0_22.resize(n);
    geo.dd_11.resize(n);
    geo.dd_12.resize(n);
    geo.dd_22.resize(n);
    geo.two_u.resize(n);
    geo.log_z.resize(n);
    geo.chi_inv1.resize(n);
    geo.chi_inv2.resize(n);
    geo.vq11.resize(n);
    geo.vq12.resize(n);
    geo.vq22.resize(n);
    geo.vol_w.resize(n);

    for (int i = 0; i < grid.n_u; ++i) {
        const double u = grid.u_node(i);
        for (int j = 0; j < grid.n_sigma; ++j) {
            const std::size_t p = grid.index(i, j);
            const double sigma = grid.sigma_center(j);
            const ReducedCoord rc{u, sigma};
            const AmbientPoint zp = ambient_from_reduced(m, rc);
            const double x1 = std::log(zp.z1.real());
            const double x2 = std::log(zp.z2.real());
            const double z = z_of_sigma(m, sigma);

            const Hermitian2 gh = hat_metric(m, zp);
            const Hermitian2 th = theta_form(m, zp);
            geo.g0_11[p] = gh.h11;
            geo.g0_12[p] = gh.h12.real();
            geo.g0_22[p] = gh.h22;
            geo.dd_11[p] = 2.0 * (th.h11 - gh.h11);
            geo.dd_12[p] = 2.0 * (th.h12.real() - gh.h12.real());
            geo.dd_22[p] = 2.0 * (th.h22 - gh.h22);

            geo.two_u[p] = 2.0 * u;
            geo.log_z[p] = std::log(z);
            geo.chi_inv1[p] = std::exp(2.0 * m.k1 * u);
            geo.chi_inv2[p] = std::exp(2.0 * m.k2 * u);

            // u-circle tangent v = (k1 z1, k2 z2), real here.
            const double v1 = m.k1 * zp.z1.real();
            const double v2 = m.k2 * zp.z2.real();
            geo.vq11[p] = v1 * v1;
            geo.vq12[p] = v1 * v2;
            geo.vq22[p] = v2 * v2;

            geo.vol_w[p] = std::exp(2.0 * u) * z;

            // ddbar entry coefficients: e_{ab} = e^{-x_a-x_b} / 4 times the
            // chain-rule expansion of (H_x)_{ab} in grid derivatives.
            const ChartJacobians cj = chart_jacobians(m, rc);
            const double e[3] = {0.25 * std::exp(-2.0 * x1),
                                 0.25 * std::exp(-x1 - x2),
                                 0.25 * std::exp(-2.0 * x2)};
            const int ab_a[3] = {0, 0, 1};
            const int ab_b[3] = {0, 1, 1};
            std::vector<double>* dst[3] = {geo.c11, geo.c12, geo.c22};
            for (int e_idx = 0; e_idx < 3; ++e_idx) {
                const int a = ab_a[e_idx], b = ab_b[e_idx];
                const double ua = cj.du_dx[a], ub = cj.du_dx[b];
                const double sa = cj.dsigma_dx[a], sb = cj.dsigma_dx[b];
                const int sym = a + b;  // index into the packed (11,12,22) arrays
                dst[e_idx][0][p] = e[e_idx] * ua * ub;               // phi_uu
                dst[e_idx][1][p] = e[e_idx] * (ua * sb + sa * ub);   // phi_us
                dst[e_idx][2][p] = e[e_idx] * sa * sb;               // phi_ss
                dst[e_idx][3][p] = e[e_idx] * cj.d2u_dx[sym];        // phi_u
                dst[e_idx][4][p] = e[e_idx] * cj.d2sigma_dx[sym];    // phi_s
            }
        }
    }
    return geo;
}

GridDerivs grid_derivs(const GridSpec& g, const std::vector<double>& f, int i, int j) {
    const int nu = g.n_u, ns = g.n_sigma;
    const double inv2du = 1.0 / (2.0 * g.du());
    const double invdu2 = 1.0 / (g.du() * g.du());
    const double inv2ds = 1.0 / (2.0 * g.dsigma());
    const double invds2 = 1.0 / (g.dsigma() * g.dsigma());

    const int ip = (i + 1) % nu, im = (i + nu - 1) % nu;
    const std::size_t p = g.index(i, j), pp = g.index(ip, j), pm = g.index(im, j);

    GridDerivs d;
    d.fu = (f[pp] - f[pm]) * inv2du;
    d.fuu = (f[pp] - 2.0 * f[p] + f[pm]) * invdu2;

    const auto ucd = [&](int jj) {  // centered u-derivative at column jj
        return (f[g.index(ip, jj)] - f[g.index(im, jj)]) * inv2du;
    };

    // one-sided stencils from quadratic extrapolation ghosts, in difference
    // form so constant fields are annihilated exactly
    if (j > 0 && j < ns - 1) {
        d.fs = (f[p + 1] - f[p - 1]) * inv2ds;
        d.fss = ((f[p + 1] - f[p]) - (f[p] - f[p - 1])) * invds2;
        d.fus = (ucd(j + 1) - ucd(j - 1)) * inv2ds;
    } else if (j == 0) {
        d.fs = (4.0 * (f[p + 1] - f[p]) - (f[p + 2] - f[p])) * inv2ds;
        d.fss = ((f[p + 2] - f[p + 1]) - (f[p + 1] - f[p])) * invds2;
        d.fus = (4.0 * (ucd(1) - ucd(0)) - (ucd(2) - ucd(0))) * inv2ds;
    } else {
        d.fs = (4.0 * (f[p] - f[p - 1]) - (f[p] - f[p - 2])) * inv2ds;
        d.fss = ((f[p - 2] - f[p - 1]) - (f[p - 1] - f[p])) * invds2;
        d.fus = (4.0 * (ucd(ns - 1) - ucd(ns - 2)) - (ucd(ns - 1) - ucd(ns - 3))) *
                inv2ds;
    }
    return d;
}

Hermitian2 reduced_complex_hessian(const FlowGeometry& geo,
                                   const std::vector<double>& phi, int i, int j) {
    const GridDerivs d = grid_derivs(geo.grid, phi, i, j);
    const std::size_t p = geo.grid.index(i, j);
    const double q[5] = {d.fuu, d.fus, d.fss, d.fu, d.fs};
    Hermitian2 h;
    double h11 = 0.0, h12 = 0.0, h22 = 0.0;
    for (int k = 0; k < 5; ++k) {
        h11 += geo.c11[k][p] * q[k];
        h12 += geo.c12[k][p] * q[k];
        h22 += geo.c22[k][p] * q[k];
    }
    h.h11 = h11;
    h.h12 = complexd{h12, 0.0};
    h.h22 = h22;
    return h;
}

}  // namespace hopf
