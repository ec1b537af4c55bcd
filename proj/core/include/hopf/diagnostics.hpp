#pragma once

#include <utility>
#include <vector>

#include "hopf/reduction.hpp"

namespace hopf {

struct FlowState;  // flow.hpp

/// One monitored snapshot of the flow. volume_predicted is (1 - 2t) Vol(0):
/// the reference-family volume law extends to the full solution because the
/// mixed term integrates to zero against Gauduchon forms and (ddbar phi)^2
/// integrates to zero by exactness.
struct MonitorRecord {
    double t = 0.0;
    double volume = 0.0;
    double volume_predicted = 0.0;
    double max_trace_chi_omega = 0.0;
    double min_metric_eigenvalue = 0.0;
    double max_psi_dot = 0.0;
    double max_abs_psi = 0.0;
    double q_max = 0.0;
    double loop_length_min = 0.0;
    double loop_length_max = 0.0;
    double c1_norm_phi = 0.0;
};

/// Vol(t) = 2 pi^2 * integral of det g e^{2u} Z du dsigma (midpoint rule; the
/// prefactor matches the round volume 2 pi^2 L at t = 0).
double total_volume(const FlowGeometry& geo, const FlowState& state);
double total_volume(const FlowState& state);

/// max over the grid of tr_chi g = chi^{i ibar} g_{i ibar}.
double trace_field_max(const FlowGeometry& geo, const FlowState& state);
double trace_field_max(const FlowState& state);

/// Q = tr_chi omega - A phi - A (1-2t)(log(1-2t) - 1) - B t, maximized.
double q_functional_max(const FlowGeometry& geo, const FlowState& state, double A,
                        double B);
double q_functional_max(const FlowState& state, double A, double B);

/// (max |psi|, max psidot) with psi = phi + 3t log Z, psidot = phidot + 3 log Z.
/// psidot is bounded above only; it diverges to -inf as the volume collapses.
std::pair<double, double> lemma31_monitors(const FlowGeometry& geo,
                                           const FlowState& state);
std::pair<double, double> lemma31_monitors(const FlowState& state);

/// (min, max) over sigma-rows of the u-circle length
/// integral_0^L sqrt(2 g(v, vbar)) du with tangent v = (k1 z1, k2 z2).
std::pair<double, double> loop_lengths(const FlowGeometry& geo,
                                       const FlowState& state);
std::pair<double, double> loop_lengths(const FlowState& state);

/// max |phi| plus the max first-difference quotient of phi on the grid.
double c1_norm(const FlowGeometry& geo, const FlowState& state);
double c1_norm(const FlowState& state);

/// All monitors in one pass over an assembled metric field; vol0 fixes the
/// volume_predicted column.
MonitorRecord compute_record(const FlowGeometry& geo, const FlowState& state,
                             double A, double B, double vol0);

}  // namespace hopf
