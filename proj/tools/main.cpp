#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "zr/config.hpp"
#include "zr/errors.hpp"
#include "zr/experiments.hpp"

namespace {

struct Args {
    std::string config_path;
    zr::RunOptions opt;
};

void add_common(CLI::App* cmd, Args& args, bool needs_config) {
    auto* c = cmd->add_option("--config", args.config_path,
                              "JSON configuration file");
    if (needs_config) c->required();
    cmd->add_option("--seed", args.opt.seed,
                    "Seed for randomized identity instances");
    cmd->add_option("--threads", args.opt.threads,
                    "Worker thread count (0: library default)");
    cmd->add_flag("--emit-plot-data", args.opt.emit_plot_data,
                  "Write (T, rel_err) convergence series");
    cmd->add_flag("--no-build", args.opt.no_build,
                  "Fail instead of sieving missing coefficient tables");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shifted zeta-ratio averages and divisor correlations"};
    app.require_subcommand(1);

    Args args;
    int count = 10;

    CLI::App* sieve = app.add_subcommand("sieve", "Build coefficient tables");
    add_common(sieve, args, true);
    CLI::App* check =
        app.add_subcommand("check-identities", "Run the identity suite");
    add_common(check, args, false);
    check->add_option("--count", count, "Instances per identity family");
    CLI::App* moments = app.add_subcommand(
        "moments", "Truncated pair sum against its prediction");
    add_common(moments, args, true);
    CLI::App* ratios =
        app.add_subcommand("ratios", "Ratio average against the swap formula");
    add_common(ratios, args, true);
    CLI::App* correlations = app.add_subcommand(
        "correlations", "Shifted coefficient correlations");
    add_common(correlations, args, true);

    CLI11_PARSE(app, argc, argv);
    args.opt.identity_count = count;

    zr::Config cfg;
    if (!args.config_path.empty()) {
        try {
            cfg = zr::load_config(args.config_path);
        } catch (const zr::ConfigError& e) {
            std::cerr << e.what() << '\n';
            return 2;
        }
    }

    if (sieve->parsed()) return zr::run_sieve(cfg, args.opt, std::cerr);
    if (check->parsed())
        return zr::run_check_identities(cfg, args.opt, std::cerr);
    if (moments->parsed()) return zr::run_moments(cfg, args.opt, std::cerr);
    if (ratios->parsed()) return zr::run_ratios(cfg, args.opt, std::cerr);
    if (correlations->parsed())
        return zr::run_correlations(cfg, args.opt, std::cerr);
    return 2;
}
