#pragma once

#include <string>
#include <vector>

#include "hopf/diagnostics.hpp"
#include "hopf/verify.hpp"

namespace hopf {

/// Shortest round-trip decimal representation (std::to_chars). Stable across
/// runs and thread counts; the basis of the byte-identical CSV guarantee.
std::string format_double(double x);

/// Exact column contract for flow time series.
inline constexpr const char* kTimeseriesHeader =
    "t,volume,volume_predicted,max_trace_chi_omega,min_metric_eigenvalue,"
    "max_psi_dot,max_abs_psi,q_max,loop_length_min,loop_length_max,c1_norm_phi";

std::string render_timeseries_csv(const std::vector<MonitorRecord>& records);
std::string render_report_csv(const std::vector<VerificationReport>& reports);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

/// Snapshot file: one JSON header line (moduli, grid, t, format tag) followed
/// by the raw row-major float64 array of phi (little-endian, u-major).
struct Snapshot {
    double abs_alpha = 0.0;
    double abs_beta = 0.0;
    int n_u = 0;
    int n_sigma = 0;
    double t = 0.0;
    std::vector<double> phi;
};

void write_snapshot(const std::string& path, const Snapshot& snap);
Snapshot read_snapshot(const std::string& path);

/// ISO 8601 UTC timestamp for manifests.
std::string utc_timestamp_now();

}  // namespace hopf
