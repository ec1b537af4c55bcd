#pragma once

#include "hopf/config.hpp"

namespace hopf {

/// Exit-code contract shared by the CLI and the acceptance harness:
/// 0 success, 1 config/usage error, 2 failing verification identity,
/// 3 inadmissible initial data, 4 unrecoverable positivity failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitVerifyFailed = 2;
inline constexpr int kExitInadmissible = 3;
inline constexpr int kExitPositivity = 4;

/// Runs the identity suite for the configured moduli; writes
/// verify_report.csv plus a human summary on stdout.
int cmd_verify(const RunConfig& cfg);

/// Runs the flow; writes timeseries.csv, snapshots at the configured times,
/// a final snapshot, and manifest.json (always, including on failure exits).
int cmd_flow(const RunConfig& cfg);

/// Tabulates pointwise static geometry (Phi, Z, det ghat, tr_chi ghat,
/// eigenvalues of ghat - Theta and Ric(chi)) over the grid into
/// static_table.csv.
int cmd_static(const RunConfig& cfg);

/// Runs cmd_flow headlessly over the sweep_alpha x sweep_beta moduli grid
/// (upper triangle; degenerate cells skipped) and writes one summary row per
/// cell into sweep_summary.csv. Cell failures are recorded and the sweep
/// continues.
int cmd_sweep(const RunConfig& cfg);

}  // namespace hopf
