#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopf/diagnostics.hpp"
#include "hopf/parallel.hpp"
#include "hopf/reduction.hpp"

namespace hopf {

/// Discretized flow potential phi over the cylinder grid at time t < 1/2.
struct FlowState {
    HopfModuli moduli;
    GridSpec grid;
    double t = 0.0;
    std::vector<double> phi;
};

struct InitialData {
    enum class Family { zero, cos_bump, file };
    Family family = Family::zero;
    double epsilon = 0.0;       // cos-bump amplitude
    std::string path;           // snapshot file for Family::file
};

/// Initial data whose assembled metric fails positivity on the grid.
struct AdmissibilityError : std::runtime_error {
    AdmissibilityError(const std::string& msg, int iu, int jsigma)
        : std::runtime_error(msg), i(iu), j(jsigma) {}
    int i, j;
};

/// Metric positivity lost during stepping (under-resolution or t too close
/// to the maximal time).
struct PositivityError : std::runtime_error {
    PositivityError(const std::string& msg, double t_, std::size_t index_)
        : std::runtime_error(msg), t(t_), index(index_) {}
    double t;
    std::size_t index;
};

struct FlowControl {
    double t_max = 0.49;           // strictly below the maximal time 1/2
    double cfl = 0.2;              // dt = cfl / rho
    double monitor_cadence = 0.01;
    double q_A = 10.0, q_B = 10.0; // Q-functional constants
    int threads = 1;
    int max_halvings = 40;
    std::vector<double> snapshot_times;
    std::function<void(const FlowState&)> snapshot_hook;
};

struct FlowResult {
    std::vector<MonitorRecord> trajectory;
    FlowState final_state;
    std::string termination;  // "completed" or "positivity_failure"
    double initial_volume = 0.0;
};

/// phi = 0, the cos-bump psi = eps cos(2 pi u / L) sigma (1 - sigma), or a
/// snapshot file. Positivity of ghat + ddbar psi is checked at every grid
/// point; the first offending point is reported on failure.
std::vector<double> make_initial_potential(const HopfModuli& m, const GridSpec& grid,
                                           const InitialData& initial);

/// g(t) = (1-2t) ghat + 2t Theta + ddbar phi at one grid point; throws
/// PositivityError if not positive definite.
Hermitian2 assemble_evolving_metric(const FlowGeometry& geo, const FlowState& state,
                                    int i, int j);

/// Assembled metric over the whole grid (g12 is real at the real-positive
/// representatives). Returns false and the first failing index if positivity
/// fails anywhere.
bool assemble_metric_field(const FlowGeometry& geo, const std::vector<double>& phi,
                           double t, std::vector<double>& g11,
                           std::vector<double>& g12, std::vector<double>& g22,
                           std::size_t* bad_index);

/// phidot = log det g - log det chi = log det g + 2u.
std::vector<double> flow_rhs(const FlowGeometry& geo, const FlowState& state);

/// Classical explicit RK4 step; throws PositivityError if any stage loses
/// positivity (callers halve dt and retry).
FlowState step_rk4(const FlowGeometry& geo, const FlowState& state, double dt);

/// Spatially constant exact solution on the round surface: the antiderivative
/// of log(1 - 2t) vanishing at t = 0,
///   phi(t) = -(1 - 2t)(log(1 - 2t) - 1)/2 - 1/2.
double exact_round_potential(double t);

/// Method-of-lines driver: adaptive dt = cfl / rho with rho the spectral-radius
/// estimate of the discrete linearization, dt clamped to land exactly on
/// monitor/snapshot times, halving-with-retry on positivity failure. Emits one
/// MonitorRecord at t = 0, at each cadence tick, and at the final time.
FlowResult run_flow(const HopfModuli& m, const GridSpec& grid,
                    const InitialData& initial, const FlowControl& control);

}  // namespace hopf
