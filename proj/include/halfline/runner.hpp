#pragma once

#include "halfline/analysis.hpp"
#include "halfline/config.hpp"
#include "halfline/trajectory.hpp"

namespace halfline {

struct CheckResult {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = true;
    std::string note;
};

struct RunSummary {
    std::string config_hash;
    std::string label;
    std::vector<CheckResult> checks;
    std::map<std::string, double> scalars;  // fitted exponents, maxima, ...
    bool truncation_contaminated = false;
    double wall_time_s = 0.0;
    std::string status = "ok";
    bool no_checks_requested = false;

    bool all_passed() const {
        if (status != "ok") return false;
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct RunArtifacts {
    RunSummary summary;
    Trajectory traj;
    std::vector<NormReport> norms;
};

// Runs one experiment: solve, write norms.csv / snapshots / plot data /
// summary.json into the config's output directory, evaluate the requested
// checks at the config-declared tolerances.
RunArtifacts run_experiment(const RunConfig& cfg);

// Spectral vs Crank-Nicolson on the same physics: per-snapshot differences,
// Robin residual series for both, and a (dx, dt)-halving convergence table.
RunSummary compare_solvers(const RunConfig& cfg);

// Cartesian sweep over [sweep] beta_values / p_values / epsilon_values /
// alpha_values; one aggregated CSV row per cell with the fitted L^inf decay
// exponent against the theorem prediction.
RunSummary sweep(const RunConfig& cfg);

// Snapshot container IO (versioned; binary is little-endian doubles).
void write_snapshots(const std::string& path, const Trajectory& traj, bool binary);
Trajectory read_snapshots(const std::string& path, GridPtr g);

}  // namespace halfline
