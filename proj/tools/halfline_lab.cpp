// Command-line front end: run / compare / sweep a declarative experiment
// config, or list the built-in presets.  Exit code 0 only when every
// requested check passed.

#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"

#include "halfline/runner.hpp"

namespace {

halfline::RunConfig load(const std::string& spec) {
    for (const auto& name : halfline::preset_names())
        if (spec == name) return halfline::preset_config(spec);
    return halfline::RunConfig::parse_file(spec);
}

void print_summary(const halfline::RunSummary& s) {
    std::printf("label: %s\nconfig hash: %s\nstatus: %s\n", s.label.c_str(),
                s.config_hash.c_str(), s.status.c_str());
    for (const auto& c : s.checks)
        std::printf("  [%s] %-28s value=%.6g threshold=%.6g %s\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.value, c.threshold, c.note.c_str());
    if (s.no_checks_requested) std::printf("  (no checks requested)\n");
    std::printf("wall time: %.2f s\n", s.wall_time_s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"halfline-lab: half-line Schrodinger boundary-value laboratory"};
    app.require_subcommand(1);

    std::string config_spec;
    auto* run_cmd = app.add_subcommand("run", "run an experiment config or preset");
    run_cmd->add_option("config", config_spec, "config file path or preset name")->required();
    auto* cmp_cmd = app.add_subcommand("compare", "spectral vs finite-difference comparison");
    cmp_cmd->add_option("config", config_spec, "config file path or preset name")->required();
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep (see [sweep] section)");
    sweep_cmd->add_option("config", config_spec, "config file path or preset name")->required();
    auto* presets_cmd = app.add_subcommand("presets", "preset utilities");
    presets_cmd->add_subcommand("list", "list bundled presets");

    CLI11_PARSE(app, argc, argv);

    try {
        if (presets_cmd->parsed()) {
            for (const auto& name : halfline::preset_names()) std::printf("%s\n", name.c_str());
            return 0;
        }
        halfline::RunSummary summary;
        if (run_cmd->parsed())
            summary = halfline::run_experiment(load(config_spec)).summary;
        else if (cmp_cmd->parsed())
            summary = halfline::compare_solvers(load(config_spec));
        else
            summary = halfline::sweep(load(config_spec));
        print_summary(summary);
        return summary.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
