#include "hopf/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hopf/io.hpp"

namespace hopf {

namespace {

constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

struct KernelOut {
    std::size_t bad_index = kNoFailure;  // min failing index, or kNoFailure
    double rho = 0.0;                    // linearization spectral-radius estimate
};

// Evaluates phidot = log det g + 2u over the grid; optionally the stability
// estimate rho. Chunks write disjoint ranges; per-chunk partials are combined
// sequentially, so the result is independent of the thread count.
KernelOut eval_rhs_kernel(const FlowGeometry& geo, const std::vector<double>& phi,
                          double t, std::vector<double>& out, TaskPool& pool,
                          bool want_rho) {
    const GridSpec& g = geo.grid;
    const int nu = g.n_u, ns = g.n_sigma;
    const std::size_t n = g.size();
    const double inv2du = 1.0 / (2.0 * g.du());
    const double invdu2 = 1.0 / (g.du() * g.du());
    const double inv2ds = 1.0 / (2.0 * g.dsigma());
    const double invds2 = 1.0 / (g.dsigma() * g.dsigma());
    const double cross = inv2du * 2.0 * inv2ds * 2.0;  // 1/(du dsigma)

    const double* f = phi.data();
    double* rhs = out.data();

    const int T = pool.threads();
    std::vector<double> rho_chunk(T, 0.0);
    std::vector<std::size_t> bad_chunk(T, kNoFailure);

    pool.parallel_for(n, [&](int chunk, std::size_t lo, std::size_t hi) {
        const double* c11[5];
        const double* c12[5];
        const double* c22[5];
        for (int k = 0; k < 5; ++k) {
            c11[k] = geo.c11[k].data();
            c12[k] = geo.c12[k].data();
            c22[k] = geo.c22[k].data();
        }
        const double* g0_11 = geo.g0_11.data();
        const double* g0_12 = geo.g0_12.data();
        const double* g0_22 = geo.g0_22.data();
        const double* dd_11 = geo.dd_11.data();
        const double* dd_12 = geo.dd_12.data();
        const double* dd_22 = geo.dd_22.data();
        const double* two_u = geo.two_u.data();

        double rho_max = 0.0;
        std::size_t bad = kNoFailure;

        for (std::size_t p = lo; p < hi; ++p) {
            const int i = static_cast<int>(p) / ns;
            const int j = static_cast<int>(p) % ns;
            const std::size_t pp = (i + 1 == nu) ? p - (n - ns) : p + ns;
            const std::size_t pm = (i == 0) ? p + (n - ns) : p - ns;

            const double fu = (f[pp] - f[pm]) * inv2du;
            const double fuu = ((f[pp] - f[p]) - (f[p] - f[pm])) * invdu2;

            // one-sided sigma stencils from quadratic extrapolation ghosts,
            // in difference form so constants are annihilated exactly
            double fs, fss, fus;
            if (j > 0 && j < ns - 1) {
                fs = (f[p + 1] - f[p - 1]) * inv2ds;
                fss = ((f[p + 1] - f[p]) - (f[p] - f[p - 1])) * invds2;
                fus = ((f[pp + 1] - f[pm + 1]) - (f[pp - 1] - f[pm - 1])) *
                      (inv2du * inv2ds);
            } else if (j == 0) {
                fs = (4.0 * (f[p + 1] - f[p]) - (f[p + 2] - f[p])) * inv2ds;
                fss = ((f[p + 2] - f[p + 1]) - (f[p + 1] - f[p])) * invds2;
                const double d0 = (f[pp] - f[pm]) * inv2du;
                const double d1 = (f[pp + 1] - f[pm + 1]) * inv2du;
                const double d2 = (f[pp + 2] - f[pm + 2]) * inv2du;
                fus = (4.0 * (d1 - d0) - (d2 - d0)) * inv2ds;
            } else {
                fs = (4.0 * (f[p] - f[p - 1]) - (f[p] - f[p - 2])) * inv2ds;
                fss = ((f[p - 2] - f[p - 1]) - (f[p - 1] - f[p])) * invds2;
                const double d0 = (f[pp] - f[pm]) * inv2du;
                const double d1 = (f[pp - 1] - f[pm - 1]) * inv2du;
                const double d2 = (f[pp - 2] - f[pm - 2]) * inv2du;
                fus = (4.0 * (d0 - d1) - (d0 - d2)) * inv2ds;
            }

            const double q0 = fuu, q1 = fus, q2 = fss, q3 = fu, q4 = fs;
            const double h11 = c11[0][p] * q0 + c11[1][p] * q1 + c11[2][p] * q2 +
                               c11[3][p] * q3 + c11[4][p] * q4;
            const double h12 = c12[0][p] * q0 + c12[1][p] * q1 + c12[2][p] * q2 +
                               c12[3][p] * q3 + c12[4][p] * q4;
            const double h22 = c22[0][p] * q0 + c22[1][p] * q1 + c22[2][p] * q2 +
                               c22[3][p] * q3 + c22[4][p] * q4;

            const double m11 = g0_11[p] + t * dd_11[p] + h11;
            const double m12 = g0_12[p] + t * dd_12[p] + h12;
            const double m22 = g0_22[p] + t * dd_22[p] + h22;
            const double det = m11 * m22 - m12 * m12;

            if (!(m11 > 0.0) || !(det > 0.0)) {
                if (p < bad) bad = p;
                rhs[p] = std::numeric_limits<double>::quiet_NaN();
                continue;
            }
            rhs[p] = std::log(det) + two_u[p];

            if (want_rho) {
                const double inv_det = 1.0 / det;
                const double gi11 = m22 * inv_det;
                const double gi12 = -m12 * inv_det;
                const double gi22 = m11 * inv_det;
                const double kuu = gi11 * c11[0][p] + 2.0 * gi12 * c12[0][p] +
                                   gi22 * c22[0][p];
                const double kus = gi11 * c11[1][p] + 2.0 * gi12 * c12[1][p] +
                                   gi22 * c22[1][p];
                const double kss = gi11 * c11[2][p] + 2.0 * gi12 * c12[2][p] +
                                   gi22 * c22[2][p];
                const double ku = gi11 * c11[3][p] + 2.0 * gi12 * c12[3][p] +
                                  gi22 * c22[3][p];
                const double ks = gi11 * c11[4][p] + 2.0 * gi12 * c12[4][p] +
                                  gi22 * c22[4][p];
                const double rho = 4.0 * std::abs(kuu) * invdu2 +
                                   4.0 * std::abs(kss) * invds2 +
                                   std::abs(kus) * cross +
                                   std::abs(ku) * 2.0 * inv2du +
                                   std::abs(ks) * 2.0 * inv2ds;
                if (rho > rho_max) rho_max = rho;
            }
        }
        rho_chunk[chunk] = rho_max;
        bad_chunk[chunk] = bad;
    });

    KernelOut result;
    for (int c = 0; c < T; ++c) {
        result.rho = std::max(result.rho, rho_chunk[c]);
        result.bad_index = std::min(result.bad_index, bad_chunk[c]);
    }
    return result;
}

void axpy(std::vector<double>& out, const std::vector<double>& x, double a,
          const std::vector<double>& y) {
    const std::size_t n = out.size();
    for (std::size_t p = 0; p < n; ++p) out[p] = x[p] + a * y[p];
}

}  // namespace

std::vector<double> make_initial_potential(const HopfModuli& m, const GridSpec& grid,
                                           const InitialData& initial) {
    grid.validate();
    std::vector<double> psi(grid.size(), 0.0);
    switch (initial.family) {
        case InitialData::Family::zero:
            break;
        case InitialData::Family::cos_bump: {
            const double two_pi = 2.0 * 3.14159265358979323846;
            for (int i = 0; i < grid.n_u; ++i) {
                const double cu = std::cos(two_pi * grid.u_node(i) / grid.period_L);
                for (int j = 0; j < grid.n_sigma; ++j) {
                    const double s = grid.sigma_center(j);
                    psi[grid.index(i, j)] = initial.epsilon * cu * s * (1.0 - s);
                }
            }
            break;
        }
        case InitialData::Family::file: {
            const Snapshot snap = read_snapshot(initial.path);
            if (snap.abs_alpha != m.abs_alpha || snap.abs_beta != m.abs_beta)
                throw std::invalid_argument(
                    "initial snapshot was written for different moduli");
            if (snap.n_u != grid.n_u || snap.n_sigma != grid.n_sigma)
                throw std::invalid_argument(
                    "initial snapshot grid does not match the configured grid");
            psi = snap.phi;
            break;
        }
    }

    // Admissibility: omega_hat + ddbar psi must be positive on the grid.
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    for (int i = 0; i < grid.n_u; ++i)
        for (int j = 0; j < grid.n_sigma; ++j) {
            const std::size_t p = grid.index(i, j);
            const Hermitian2 h = reduced_complex_hessian(geo, psi, i, j);
            const Hermitian2 g0{geo.g0_11[p], geo.g0_22[p], complexd{geo.g0_12[p], 0.0}};
            if (!(g0 + h).positive_definite())
                throw AdmissibilityError(
                    "initial data not admissible: omega_hat + ddbar psi fails "
                    "positivity at grid point (" +
                        std::to_string(i) + ", " + std::to_string(j) + ")",
                    i, j);
        }
    return psi;
}

Hermitian2 assemble_evolving_metric(const FlowGeometry& geo, const FlowState& state,
                                    int i, int j) {
    if (!(state.t < 0.5))
        throw std::invalid_argument("assemble_evolving_metric: t must be < 1/2");
    const std::size_t p = geo.grid.index(i, j);
    Hermitian2 g = reduced_complex_hessian(geo, state.phi, i, j);
    g.h11 += geo.g0_11[p] + state.t * geo.dd_11[p];
    g.h12 += complexd{geo.g0_12[p] + state.t * geo.dd_12[p], 0.0};
    g.h22 += geo.g0_22[p] + state.t * geo.dd_22[p];
    if (!g.positive_definite())
        throw PositivityError("evolving metric lost positivity", state.t, p);
    return g;
}

bool assemble_metric_field(const FlowGeometry& geo, const std::vector<double>& phi,
                           double t, std::vector<double>& g11,
                           std::vector<double>& g12, std::vector<double>& g22,
                           std::size_t* bad_index) {
    const GridSpec& grid = geo.grid;
    const std::size_t n = grid.size();
    g11.resize(n);
    g12.resize(n);
    g22.resize(n);
    std::size_t bad = kNoFailure;
    for (int i = 0; i < grid.n_u; ++i)
        for (int j = 0; j < grid.n_sigma; ++j) {
            const std::size_t p = grid.index(i, j);
            const Hermitian2 h = reduced_complex_hessian(geo, phi, i, j);
            g11[p] = geo.g0_11[p] + t * geo.dd_11[p] + h.h11;
            g12[p] = geo.g0_12[p] + t * geo.dd_12[p] + h.h12.real();
            g22[p] = geo.g0_22[p] + t * geo.dd_22[p] + h.h22;
            const double det = g11[p] * g22[p] - g12[p] * g12[p];
            if ((!(g11[p] > 0.0) || !(det > 0.0)) && p < bad) bad = p;
        }
    if (bad_index) *bad_index = bad;
    return bad == kNoFailure;
}

std::vector<double> flow_rhs(const FlowGeometry& geo, const FlowState& state) {
    std::vector<double> out(geo.grid.size());
    TaskPool pool(1);
    const KernelOut r = eval_rhs_kernel(geo, state.phi, state.t, out, pool, false);
    if (r.bad_index != kNoFailure)
        throw PositivityError("flow_rhs: metric not positive definite", state.t,
                              r.bad_index);
    return out;
}

FlowState step_rk4(const FlowGeometry& geo, const FlowState& state, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("step_rk4: dt must be positive");
    if (!(state.t + dt < 0.5))
        throw std::invalid_argument("step_rk4: t + dt must stay below 1/2");
    TaskPool pool(1);
    const std::size_t n = geo.grid.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);

    const auto stage = [&](const std::vector<double>& f, double t,
                           std::vector<double>& k) {
        const KernelOut r = eval_rhs_kernel(geo, f, t, k, pool, false);
        if (r.bad_index != kNoFailure)
            throw PositivityError("step_rk4: stage lost positivity", t, r.bad_index);
    };

    stage(state.phi, state.t, k1);
    axpy(tmp, state.phi, 0.5 * dt, k1);
    stage(tmp, state.t + 0.5 * dt, k2);
    axpy(tmp, state.phi, 0.5 * dt, k2);
    stage(tmp, state.t + 0.5 * dt, k3);
    axpy(tmp, state.phi, dt, k3);
    stage(tmp, state.t + dt, k4);

    FlowState next = state;
    next.t = state.t + dt;
    for (std::size_t p = 0; p < n; ++p)
        next.phi[p] =
            state.phi[p] + dt / 6.0 * (k1[p] + 2.0 * k2[p] + 2.0 * k3[p] + k4[p]);
    return next;
}

double exact_round_potential(double t) {
    if (!(t >= 0.0 && t < 0.5))
        throw std::invalid_argument("exact_round_potential: t must lie in [0, 1/2)");
    const double s = 1.0 - 2.0 * t;
    return -0.5 * s * (std::log(s) - 1.0) - 0.5;
}

FlowResult run_flow(const HopfModuli& m, const GridSpec& grid,
                    const InitialData& initial, const FlowControl& control) {
    if (!(control.t_max > 0.0 && control.t_max < 0.5))
        throw std::invalid_argument("run_flow: t_max must lie in (0, 1/2)");

    FlowState state{m, grid, 0.0, make_initial_potential(m, grid, initial)};
    const FlowGeometry geo = FlowGeometry::build(m, grid);
    TaskPool pool(control.threads > 0 ? control.threads : TaskPool::default_threads());

    // Mandatory stopping times: cadence ticks, snapshot times, t_max.
    std::vector<double> marks;
    for (int k = 1; k * control.monitor_cadence < control.t_max; ++k)
        marks.push_back(k * control.monitor_cadence);
    for (double ts : control.snapshot_times)
        if (ts > 0.0 && ts < control.t_max) marks.push_back(ts);
    marks.push_back(control.t_max);
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end(),
                            [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                marks.end());

    const auto is_snapshot_time = [&](double t) {
        for (double ts : control.snapshot_times)
            if (std::abs(ts - t) < 1e-12) return true;
        return false;
    };

    FlowResult result;
    result.initial_volume = total_volume(geo, state);
    result.trajectory.push_back(
        compute_record(geo, state, control.q_A, control.q_B, result.initial_volume));

    const std::size_t n = grid.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
    std::size_t next_mark = 0;

    while (state.t < control.t_max - 1e-14) {
        // Stage 1 is dt-independent and carries the stability estimate.
        const KernelOut s1 = eval_rhs_kernel(geo, state.phi, state.t, k1, pool, true);
        if (s1.bad_index != kNoFailure) {
            result.termination = "positivity_failure";
            result.final_state = std::move(state);
            return result;
        }
        double dt = control.cfl / std::max(s1.rho, 1e-300);
        const double to_mark = marks[next_mark] - state.t;
        bool lands_on_mark = false;
        if (dt >= to_mark) {
            dt = to_mark;
            lands_on_mark = true;
        }

        bool accepted = false;
        for (int attempt = 0; attempt <= control.max_halvings; ++attempt) {
            bool ok = true;
            const auto stage = [&](const std::vector<double>& f, double t,
                                   std::vector<double>& k) {
                if (!ok) return;
                ok = eval_rhs_kernel(geo, f, t, k, pool, false).bad_index == kNoFailure;
            };
            axpy(tmp, state.phi, 0.5 * dt, k1);
            stage(tmp, state.t + 0.5 * dt, k2);
            axpy(tmp, state.phi, 0.5 * dt, k2);
            stage(tmp, state.t + 0.5 * dt, k3);
            axpy(tmp, state.phi, dt, k3);
            stage(tmp, state.t + dt, k4);
            if (ok) {
                for (std::size_t p = 0; p < n; ++p)
                    state.phi[p] += dt / 6.0 * (k1[p] + 2.0 * k2[p] + 2.0 * k3[p] + k4[p]);
                state.t = lands_on_mark ? marks[next_mark] : state.t + dt;
                accepted = true;
                break;
            }
            dt *= 0.5;
            lands_on_mark = false;
        }
        if (!accepted) {
            result.termination = "positivity_failure";
            result.final_state = std::move(state);
            return result;
        }

        if (lands_on_mark) {
            try {
                result.trajectory.push_back(compute_record(
                    geo, state, control.q_A, control.q_B, result.initial_volume));
            } catch (const PositivityError&) {
                result.termination = "positivity_failure";
                result.final_state = std::move(state);
                return result;
            }
            if (control.snapshot_hook && is_snapshot_time(state.t))
                control.snapshot_hook(state);
            ++next_mark;
        }
    }

    result.termination = "completed";
    result.final_state = std::move(state);
    return result;
}

}  // namespace hopf
