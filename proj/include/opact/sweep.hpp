#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "opact/engine.hpp"

namespace opact {

/// Inclusive grid min, min + step, ..., max.
struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  double step = 0.1;

  std::vector<double> points() const;

  friend bool operator==(const GridAxis&, const GridAxis&) = default;
};

struct SweepSpec {
  GridAxis epsilon{0.0, 0.5, 0.05};
  GridAxis phi{0.0, 1.0, 0.05};
  std::size_t runs_per_cell = 10;
  std::uint64_t seed = 0;
  /// Template scenario; openness, commitment and seed are overwritten per run.
  ScenarioConfig base;

  void validate() const;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct CellResult {
  double epsilon = 0.0;
  double phi = 0.0;
  double mean_d = 0.0;
  double std_d = 0.0;  // sample standard deviation; 0 for a single run
  std::size_t runs = 0;
};

struct SweepResult {
  SweepSpec spec;
  std::size_t epsilon_count = 0;
  std::size_t phi_count = 0;
  std::vector<CellResult> cells;  // epsilon-major

  const CellResult& at(std::size_t epsilon_index, std::size_t phi_index) const {
    return cells.at(epsilon_index * phi_count + phi_index);
  }
};

/// Seed of replicate r in flat cell c; depends on nothing else.
std::uint64_t replicate_seed(std::uint64_t master, std::size_t cell, std::size_t replicate);

/// Runs every (cell, replicate) pair, across `threads` OpenMP threads when
/// threads > 1. Output does not depend on the thread count.
SweepResult run_sweep(const SweepSpec& spec, int threads = 1);

/// 10 eps + 3 phi >= 3.5, with slack for grid values like 0.30000000000000004.
bool above_alignment_line(double epsilon, double phi);

struct ClassStats {
  std::size_t cells = 0;
  double mean_of_mean_d = 0.0;
  double max_mean_d = 0.0;
  std::size_t misclassified = 0;
};

struct BoundaryReport {
  double threshold = 0.01;
  ClassStats above;  // misclassified: mean_D > threshold
  ClassStats below;  // misclassified: mean_D <= threshold
  double consistent_fraction = 0.0;
};

BoundaryReport boundary_report(const SweepResult& result, double threshold = 0.01);

}  // namespace opact
