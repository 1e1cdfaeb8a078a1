#pragma once

// Artifact writers. Reals are printed with 17 significant digits so a
// re-read reproduces the exact double.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "opact/engine.hpp"
#include "opact/metrics.hpp"
#include "opact/sweep.hpp"

namespace opact {

std::string format_real(double v);

/// Long format: step,agent,opinion,action,discrepancy
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

/// epsilon,phi,mean_D,std_D,runs
void write_sweep_csv(const SweepResult& result, std::ostream& out);

nlohmann::json summary_json(const Trajectory& trajectory, const RunSummary& summary, double cluster_gap);
nlohmann::json boundary_json(const BoundaryReport& report, const SweepResult& result);

/// One-line human digest of a run.
std::string digest(const RunSummary& summary);

}  // namespace opact
