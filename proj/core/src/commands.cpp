#include "hopf/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "hopf/flow.hpp"
#include "hopf/io.hpp"
#include "hopf/verify.hpp"
#include "hopf/version.hpp"

namespace hopf {

namespace {

namespace fs = std::filesystem;

nlohmann::json config_json(const RunConfig& c) {
    return nlohmann::json{{"abs_alpha", c.abs_alpha},
                          {"abs_beta", c.abs_beta},
                          {"n_u", c.n_u},
                          {"n_sigma", c.n_sigma},
                          {"t_max", c.t_max},
                          {"cfl", c.cfl},
                          {"monitor_cadence", c.monitor_cadence},
                          {"initial_family", c.initial_family},
                          {"initial_epsilon", c.initial_epsilon},
                          {"initial_path", c.initial_path},
                          {"diag_A", c.diag_A},
                          {"diag_B", c.diag_B},
                          {"seed", c.seed},
                          {"threads", c.threads},
                          {"out_dir", c.out_dir},
                          {"verify_samples", c.verify_samples},
                          {"verify_fd_samples", c.verify_fd_samples},
                          {"hessian_variant", c.hessian_variant},
                          {"snapshot_times", c.snapshot_times},
                          {"sweep_alpha", c.sweep_alpha},
                          {"sweep_beta", c.sweep_beta}};
}

void write_manifest(const std::string& dir, const RunConfig& cfg,
                    const std::string& started_at, double wall_seconds,
                    const std::string& termination) {
    nlohmann::json m{{"config", config_json(cfg)},
                     {"version", kVersion},
                     {"started_at", started_at},
                     {"wall_seconds", wall_seconds},
                     {"termination", termination}};
    write_text_file(dir + "/manifest.json", m.dump(2) + "\n");
}

InitialData initial_from_config(const RunConfig& cfg) {
    InitialData init;
    if (cfg.initial_family == "zero") {
        init.family = InitialData::Family::zero;
    } else if (cfg.initial_family == "cos-bump") {
        init.family = InitialData::Family::cos_bump;
        init.epsilon = cfg.initial_epsilon;
    } else {
        init.family = InitialData::Family::file;
        init.path = cfg.initial_path;
    }
    return init;
}

struct FlowRun {
    int exit_code = kExitOk;
    FlowResult result;  // valid unless exit_code == kExitInadmissible
};

// Shared by cmd_flow and the sweep cells: runs the flow, writes timeseries,
// snapshots, and the manifest (the manifest is written on every exit path).
FlowRun run_flow_with_outputs(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::string started_at = utc_timestamp_now();
    fs::create_directories(cfg.out_dir);
    const auto wall = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    };

    const HopfModuli m = make_moduli(cfg.abs_alpha, cfg.abs_beta);
    const GridSpec grid{cfg.n_u, cfg.n_sigma, m.period_L};

    FlowControl control;
    control.t_max = cfg.t_max;
    control.cfl = cfg.cfl;
    control.monitor_cadence = cfg.monitor_cadence;
    control.q_A = cfg.diag_A;
    control.q_B = cfg.diag_B;
    control.threads = cfg.threads;
    control.snapshot_times = cfg.snapshot_times;
    control.snapshot_hook = [&](const FlowState& s) {
        write_snapshot(cfg.out_dir + "/snapshot_t" + format_double(s.t) + ".snap",
                       Snapshot{m.abs_alpha, m.abs_beta, grid.n_u, grid.n_sigma, s.t,
                                s.phi});
    };

    FlowRun run;
    try {
        run.result = run_flow(m, grid, initial_from_config(cfg), control);
    } catch (const AdmissibilityError& e) {
        std::fprintf(stderr, "flow: %s\n", e.what());
        write_manifest(cfg.out_dir, cfg, started_at, wall(),
                       "inadmissible_initial_data");
        run.exit_code = kExitInadmissible;
        return run;
    }

    write_text_file(cfg.out_dir + "/timeseries.csv",
                    render_timeseries_csv(run.result.trajectory));
    write_snapshot(cfg.out_dir + "/snapshot_final.snap",
                   Snapshot{m.abs_alpha, m.abs_beta, grid.n_u, grid.n_sigma,
                            run.result.final_state.t, run.result.final_state.phi});
    write_manifest(cfg.out_dir, cfg, started_at, wall(), run.result.termination);

    if (run.result.termination != "completed") {
        std::fprintf(stderr, "flow: terminated early (%s) at t = %s\n",
                     run.result.termination.c_str(),
                     format_double(run.result.final_state.t).c_str());
        run.exit_code = kExitPositivity;
    }
    return run;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
    const HopfModuli m = make_moduli(cfg.abs_alpha, cfg.abs_beta);
    VerifyConfig vc;
    vc.seed = cfg.seed;
    vc.samples_algebraic = cfg.verify_samples;
    vc.samples_fd = cfg.verify_fd_samples;
    vc.hessian_variant = cfg.hessian_variant == "printed" ? HessianVariant::printed
                                                          : HessianVariant::corrected;
    const std::vector<VerificationReport> reports = run_suite(m, vc);

    fs::create_directories(cfg.out_dir);
    write_text_file(cfg.out_dir + "/verify_report.csv", render_report_csv(reports));

    bool all_pass = true;
    std::printf("identity verification, moduli (%s, %s), seed %llu\n",
                format_double(cfg.abs_alpha).c_str(),
                format_double(cfg.abs_beta).c_str(),
                static_cast<unsigned long long>(cfg.seed));
    for (const VerificationReport& r : reports) {
        all_pass = all_pass && r.pass;
        std::printf("  %-30s %5ld samples  max residual %-12.3e tol %-8.0e %s%s%s\n",
                    r.identity.c_str(), r.samples, r.max_residual, r.tolerance,
                    r.pass ? "pass" : "FAIL", r.notes.empty() ? "" : "  -- ",
                    r.notes.c_str());
    }
    std::printf("%s\n", all_pass ? "all identities pass" : "FAILURES PRESENT");
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_flow(const RunConfig& cfg) {
    const FlowRun run = run_flow_with_outputs(cfg);
    if (run.exit_code == kExitOk) {
        std::printf("flow completed: t = %s, volume %s -> %s (%zu records)\n",
                    format_double(run.result.final_state.t).c_str(),
                    format_double(run.result.initial_volume).c_str(),
                    format_double(run.result.trajectory.back().volume).c_str(),
                    run.result.trajectory.size());
    }
    return run.exit_code;
}

int cmd_static(const RunConfig& cfg) {
    const HopfModuli m = make_moduli(cfg.abs_alpha, cfg.abs_beta);
    const GridSpec grid{cfg.n_u, cfg.n_sigma, m.period_L};
    grid.validate();

    std::string csv =
        "u,sigma,phi,z,det_ghat,trace_chi_ghat,eig_min_ghat_minus_theta,"
        "eig_max_ghat_minus_theta,eig_min_ric_chi,eig_max_ric_chi\n";
    for (int i = 0; i < grid.n_u; ++i)
        for (int j = 0; j < grid.n_sigma; ++j) {
            const ReducedCoord rc{grid.u_node(i), grid.sigma_center(j)};
            const AmbientPoint p = ambient_from_reduced(m, rc);
            const Hermitian2 gh = hat_metric(m, p);
            const Hermitian2 diff = gh - theta_form(m, p);
            const Hermitian2 ric = ricci_chi(m, p);
            const char* sep = ",";
            csv += format_double(rc.u) + sep + format_double(rc.sigma) + sep +
                   format_double(std::exp(rc.u)) + sep +
                   format_double(z_of_sigma(m, rc.sigma)) + sep +
                   format_double(gh.det()) + sep +
                   format_double(trace_pair(chi_metric(m, p), gh)) + sep +
                   format_double(diff.eig_min()) + sep +
                   format_double(diff.eig_max()) + sep +
                   format_double(ric.eig_min()) + sep +
                   format_double(ric.eig_max()) + '\n';
        }
    fs::create_directories(cfg.out_dir);
    write_text_file(cfg.out_dir + "/static_table.csv", csv);
    std::printf("static table: %d rows -> %s/static_table.csv\n",
                cfg.n_u * cfg.n_sigma, cfg.out_dir.c_str());
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg) {
    if (cfg.sweep_alpha.empty() || cfg.sweep_beta.empty())
        throw ConfigError("sweep_alpha/sweep_beta: required for the sweep command");
    fs::create_directories(cfg.out_dir);

    std::string csv =
        "abs_alpha,abs_beta,vol0,final_t,sup_max_trace_chi_omega,"
        "loop_spread_final,status\n";
    int worst_exit = kExitOk;
    for (double a : cfg.sweep_alpha)
        for (double b : cfg.sweep_beta) {
            if (!(a > 1.0) || a > b) continue;  // outside class-1 moduli: skip
            RunConfig cell = cfg;
            cell.abs_alpha = a;
            cell.abs_beta = b;
            cell.out_dir = cfg.out_dir + "/cell_a" + format_double(a) + "_b" +
                           format_double(b);

            std::string status;
            double vol0 = 0.0, final_t = 0.0, sup_trace = 0.0, spread = 0.0;
            try {
                const FlowRun run = run_flow_with_outputs(cell);
                worst_exit = std::max(worst_exit, run.exit_code);
                if (run.exit_code == kExitInadmissible) {
                    status = "inadmissible";
                } else {
                    status = run.result.termination;
                    vol0 = run.result.initial_volume;
                    final_t = run.result.final_state.t;
                    for (const MonitorRecord& r : run.result.trajectory)
                        sup_trace = std::max(sup_trace, r.max_trace_chi_omega);
                    const MonitorRecord& last = run.result.trajectory.back();
                    spread = last.loop_length_max / last.loop_length_min - 1.0;
                }
            } catch (const std::exception& e) {
                worst_exit = std::max(worst_exit, kExitPositivity);
                status = std::string("error: ") + e.what();
            }
            csv += format_double(a) + "," + format_double(b) + "," +
                   format_double(vol0) + "," + format_double(final_t) + "," +
                   format_double(sup_trace) + "," + format_double(spread) + "," +
                   status + '\n';
        }
    write_text_file(cfg.out_dir + "/sweep_summary.csv", csv);
    std::printf("sweep summary -> %s/sweep_summary.csv\n", cfg.out_dir.c_str());
    return worst_exit;
}

}  // namespace hopf
