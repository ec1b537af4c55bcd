// hopfflow: construct Gauduchon-Ornea LCK metrics on class-1 primary Hopf
// surfaces, verify their tensor identities against finite-difference oracles,
// and integrate the Chern-Ricci flow on the reduced cylinder.
//
// Subcommands: verify | flow | static | sweep. Configuration comes from, in
// increasing precedence: built-in defaults, --preset, --config file,
// HOPFCRF_* environment variables, explicit flags (--out, --seed).

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "hopf/commands.hpp"
#include "hopf/config.hpp"
#include "hopf/io.hpp"
#include "hopf/version.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::string preset;
    std::string seed;
};

hopf::RunConfig assemble_config(const CommonArgs& args) {
    hopf::RunConfig cfg;
    if (!args.preset.empty()) cfg = hopf::preset_config(args.preset);
    if (!args.config_path.empty())
        hopf::apply_config_text(cfg, hopf::read_text_file(args.config_path));
    hopf::apply_env_overrides(cfg);
    if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
    if (!args.seed.empty()) hopf::apply_key_value(cfg, "seed", args.seed);
    hopf::validate_config(cfg);
    return cfg;
}

void add_common(CLI::App* sub, CommonArgs& args) {
    sub->add_option("--config", args.config_path, "key = value config file");
    sub->add_option("--out", args.out_dir, "output directory");
    sub->add_option("--preset", args.preset, "built-in moduli preset (round, asym)");
    sub->add_option("--seed", args.seed, "RNG seed override");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chern-Ricci flow on class-1 primary Hopf surfaces"};
    app.set_version_flag("--version", hopf::kVersion);
    app.require_subcommand(1);

    CommonArgs args;
    int (*command)(const hopf::RunConfig&) = nullptr;

    auto* verify = app.add_subcommand("verify", "run the identity suite");
    add_common(verify, args);
    verify->callback([&] { command = hopf::cmd_verify; });

    auto* flow = app.add_subcommand("flow", "integrate the flow and emit monitors");
    add_common(flow, args);
    flow->callback([&] { command = hopf::cmd_flow; });

    auto* stat = app.add_subcommand("static", "tabulate pointwise geometry");
    add_common(stat, args);
    stat->callback([&] { command = hopf::cmd_static; });

    auto* sweep = app.add_subcommand("sweep", "map flow summaries over moduli");
    add_common(sweep, args);
    sweep->callback([&] { command = hopf::cmd_sweep; });

    CLI11_PARSE(app, argc, argv);

    try {
        return command(assemble_config(args));
    } catch (const hopf::ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return hopf::kExitConfig;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
