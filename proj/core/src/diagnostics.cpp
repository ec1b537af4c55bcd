#include "hopf/diagnostics.hpp"

#include <cmath>

#include "hopf/flow.hpp"

namespace hopf {

namespace {

constexpr double kTwoPiSq = 2.0 * 3.14159265358979323846 * 3.14159265358979323846;

struct AssembledField {
    std::vector<double> g11, g12, g22;
};

AssembledField assemble_or_throw(const FlowGeometry& geo, const FlowState& state) {
    AssembledField f;
    std::size_t bad = 0;
    if (!assemble_metric_field(geo, state.phi, state.t, f.g11, f.g12, f.g22, &bad))
        throw PositivityError("diagnostics: metric not positive definite", state.t,
                              bad);
    return f;
}

}  // namespace

double total_volume(const FlowGeometry& geo, const FlowState& state) {
    const AssembledField f = assemble_or_throw(geo, state);
    const double cell = geo.grid.du() * geo.grid.dsigma();
    double sum = 0.0;
    const std::size_t n = geo.grid.size();
    for (std::size_t p = 0; p < n; ++p) {
        const double det = f.g11[p] * f.g22[p] - f.g12[p] * f.g12[p];
        sum += det * geo.vol_w[p];
    }
    return kTwoPiSq * sum * cell;
}

double trace_field_max(const FlowGeometry& geo, const FlowState& state) {
    const AssembledField f = assemble_or_throw(geo, state);
    double worst = 0.0;
    const std::size_t n = geo.grid.size();
    for (std::size_t p = 0; p < n; ++p)
        worst = std::max(worst,
                         geo.chi_inv1[p] * f.g11[p] + geo.chi_inv2[p] * f.g22[p]);
    return worst;
}

double q_functional_max(const FlowGeometry& geo, const FlowState& state, double A,
                        double B) {
    if (!(A > 0.0 && B > 0.0))
        throw std::invalid_argument("q_functional_max: A, B must be positive");
    const AssembledField f = assemble_or_throw(geo, state);
    const double s = 1.0 - 2.0 * state.t;
    const double drift = A * s * (std::log(s) - 1.0) + B * state.t;
    double worst = -1e300;
    const std::size_t n = geo.grid.size();
    for (std::size_t p = 0; p < n; ++p) {
        const double tr = geo.chi_inv1[p] * f.g11[p] + geo.chi_inv2[p] * f.g22[p];
        worst = std::max(worst, tr - A * state.phi[p] - drift);
    }
    return worst;
}

std::pair<double, double> lemma31_monitors(const FlowGeometry& geo,
                                           const FlowState& state) {
    const AssembledField f = assemble_or_throw(geo, state);
    double max_abs_psi = 0.0, max_psi_dot = -1e300;
    const std::size_t n = geo.grid.size();
    for (std::size_t p = 0; p < n; ++p) {
        const double det = f.g11[p] * f.g22[p] - f.g12[p] * f.g12[p];
        const double phidot = std::log(det) + geo.two_u[p];
        const double psi = state.phi[p] + 3.0 * state.t * geo.log_z[p];
        const double psidot = phidot + 3.0 * geo.log_z[p];
        max_abs_psi = std::max(max_abs_psi, std::abs(psi));
        max_psi_dot = std::max(max_psi_dot, psidot);
    }
    return {max_abs_psi, max_psi_dot};
}

std::pair<double, double> loop_lengths(const FlowGeometry& geo,
                                       const FlowState& state) {
    const AssembledField f = assemble_or_throw(geo, state);
    const GridSpec& g = geo.grid;
    double lmin = 1e300, lmax = 0.0;
    for (int j = 0; j < g.n_sigma; ++j) {
        double len = 0.0;
        for (int i = 0; i < g.n_u; ++i) {
            const std::size_t p = g.index(i, j);
            const double gvv = f.g11[p] * geo.vq11[p] + 2.0 * f.g12[p] * geo.vq12[p] +
                               f.g22[p] * geo.vq22[p];
            len += std::sqrt(std::max(0.0, 2.0 * gvv));
        }
        len *= g.du();
        lmin = std::min(lmin, len);
        lmax = std::max(lmax, len);
    }
    return {lmin, lmax};
}

double c1_norm(const FlowGeometry& geo, const FlowState& state) {
    const GridSpec& g = geo.grid;
    double max_abs = 0.0, max_diff = 0.0;
    for (int i = 0; i < g.n_u; ++i)
        for (int j = 0; j < g.n_sigma; ++j) {
            max_abs = std::max(max_abs, std::abs(state.phi[g.index(i, j)]));
            const GridDerivs d = grid_derivs(g, state.phi, i, j);
            max_diff = std::max({max_diff, std::abs(d.fu), std::abs(d.fs)});
        }
    return max_abs + max_diff;
}

MonitorRecord compute_record(const FlowGeometry& geo, const FlowState& state,
                             double A, double B, double vol0) {
    const AssembledField f = assemble_or_throw(geo, state);
    const GridSpec& g = geo.grid;
    const std::size_t n = g.size();

    MonitorRecord r;
    r.t = state.t;
    r.volume_predicted = (1.0 - 2.0 * state.t) * vol0;

    const double s = 1.0 - 2.0 * state.t;
    const double drift = A * s * (std::log(s) - 1.0) + B * state.t;
    double vol_sum = 0.0;
    double tr_max = 0.0, eig_min = 1e300, psi_max = 0.0, psidot_max = -1e300;
    double q_max = -1e300;

    for (std::size_t p = 0; p < n; ++p) {
        const double g11 = f.g11[p], g12 = f.g12[p], g22 = f.g22[p];
        const double det = g11 * g22 - g12 * g12;
        vol_sum += det * geo.vol_w[p];

        const double tr = geo.chi_inv1[p] * g11 + geo.chi_inv2[p] * g22;
        tr_max = std::max(tr_max, tr);
        q_max = std::max(q_max, tr - A * state.phi[p] - drift);

        const double half_tr = 0.5 * (g11 + g22);
        const double disc =
            std::sqrt(std::max(0.0, half_tr * half_tr - det));
        eig_min = std::min(eig_min, half_tr - disc);

        const double psi = state.phi[p] + 3.0 * state.t * geo.log_z[p];
        psi_max = std::max(psi_max, std::abs(psi));
        psidot_max =
            std::max(psidot_max, std::log(det) + geo.two_u[p] + 3.0 * geo.log_z[p]);
    }
    r.volume = kTwoPiSq * vol_sum * g.du() * g.dsigma();
    r.max_trace_chi_omega = tr_max;
    r.min_metric_eigenvalue = eig_min;
    r.max_abs_psi = psi_max;
    r.max_psi_dot = psidot_max;
    r.q_max = q_max;

    double lmin = 1e300, lmax = 0.0;
    for (int j = 0; j < g.n_sigma; ++j) {
        double len = 0.0;
        for (int i = 0; i < g.n_u; ++i) {
            const std::size_t p = g.index(i, j);
            const double gvv = f.g11[p] * geo.vq11[p] + 2.0 * f.g12[p] * geo.vq12[p] +
                               f.g22[p] * geo.vq22[p];
            len += std::sqrt(std::max(0.0, 2.0 * gvv));
        }
        len *= g.du();
        lmin = std::min(lmin, len);
        lmax = std::max(lmax, len);
    }
    r.loop_length_min = lmin;
    r.loop_length_max = lmax;
    r.c1_norm_phi = c1_norm(geo, state);
    return r;
}

// Convenience overloads that rebuild the grid geometry.
double total_volume(const FlowState& s) {
    return total_volume(FlowGeometry::build(s.moduli, s.grid), s);
}
double trace_field_max(const FlowState& s) {
    return trace_field_max(FlowGeometry::build(s.moduli, s.grid), s);
}
double q_functional_max(const FlowState& s, double A, double B) {
    return q_functional_max(FlowGeometry::build(s.moduli, s.grid), s, A, B);
}
std::pair<double, double> lemma31_monitors(const FlowState& s) {
    return lemma31_monitors(FlowGeometry::build(s.moduli, s.grid), s);
}
std::pair<double, double> loop_lengths(const FlowState& s) {
    return loop_lengths(FlowGeometry::build(s.moduli, s.grid), s);
}
double c1_norm(const FlowState& s) {
    return c1_norm(FlowGeometry::build(s.moduli, s.grid), s);
}

}  // namespace hopf
