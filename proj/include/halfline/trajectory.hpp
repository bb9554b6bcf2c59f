#pragma once

#include <string>
#include <vector>

#include "halfline/field.hpp"

namespace halfline {

enum class RunStatus { ok, aborted_unstable, not_run };

// Time-ordered snapshots of a run.  u must always equal w + z where the
// splitting exists; solvers assemble it rather than evolving u separately.
struct Snapshot {
    double t = 0.0;
    ComplexField u;
    ComplexField w;  // homogeneous-boundary part (empty fields when unsplit)
    ComplexField z;  // boundary-driven part
    bool has_split = false;
};

struct Trajectory {
    std::vector<Snapshot> snapshots;
    double dt = 0.0;
    std::string solver;
    RunStatus status = RunStatus::ok;
    bool truncation_contaminated = false;  // >1e-6 of mass in the last 10% of nodes
    double max_tail_fraction = 0.0;

    const Snapshot& at_time(double t, double tol = 1e-9) const {
        for (const auto& s : snapshots)
            if (std::abs(s.t - t) <= tol) return s;
        throw UsageError("trajectory has no snapshot at t = " + std::to_string(t));
    }
    const Snapshot& back() const { return snapshots.back(); }
    bool empty() const { return snapshots.empty(); }

    void note_tail(const ComplexField& u) {
        const double f = tail_mass_fraction(u);
        max_tail_fraction = std::max(max_tail_fraction, f);
        if (f > 1e-6) truncation_contaminated = true;
    }
};

}  // namespace halfline
