#include "opact/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "opact/errors.hpp"
#include "opact/metrics.hpp"
#include "opact/rng.hpp"


namespace opact {

namespace {

void check_axis(const GridAxis& axis, const std::string& field) {
  if (!(axis.step > 0.0)) throw ConfigError(field + ".step: must be positive");
  if (!(axis.min >= 0.0 && axis.max <= 1.0)) throw ConfigError(field + ": range outside [0,1]");
  if (axis.min > axis.max) throw ConfigError(field + ": interval bounds out of order");
  const double spans = (axis.max - axis.min) / axis.step;
  if (std::abs(spans - std::round(spans)) > 1e-9)
    throw ConfigError(field + ".step: does not divide the range");
}

// Grid values are snapped to 1e-12 so that 3 * 0.1 prints and compares as 0.3.
double snap(double v) { return std::nearbyint(v * 1e12) / 1e12; }

}  // namespace

std::vector<double> GridAxis::points() const {
  const auto count = static_cast<std::size_t>(std::llround((max - min) / step)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = snap(min + static_cast<double>(k) * step);
  return out;
}

void SweepSpec::validate() const {
  check_axis(epsilon, "epsilon");
  check_axis(phi, "phi");
  if (runs_per_cell < 1) throw ConfigError("runs_per_cell: must be at least 1");
  ScenarioConfig probe = base;
  probe.openness = 0.0;
  probe.commitment = 0.0;
  probe.validate();
}

std::uint64_t replicate_seed(std::uint64_t master, std::size_t cell, std::size_t replicate) {
  return derive_seed(master, "sweep", cell, replicate);
}

SweepResult run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  const auto eps = spec.epsilon.points();
  const auto phis = spec.phi.points();
  const std::size_t cells = eps.size() * phis.size();
  const std::size_t reps = spec.runs_per_cell;
  const auto jobs = static_cast<std::ptrdiff_t>(cells * reps);

  std::vector<double> d(cells * reps);
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic) num_threads(std::max(threads, 1))
  for (std::ptrdiff_t job = 0; job < jobs; ++job) {
    const auto cell = static_cast<std::size_t>(job) / reps;
    const auto rep = static_cast<std::size_t>(job) % reps;
    ScenarioConfig config = spec.base;
    config.openness = eps[cell / phis.size()];
    config.commitment = phis[cell % phis.size()];
    config.seed = replicate_seed(spec.seed, cell, rep);
    try {
      const Trajectory t = run(config);
      d[job] = group_discrepancy(t.opinions.back(), t.actions.back());
    } catch (...) {
#pragma omp critical(opact_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  // Replicates are reduced in index order, independent of completion order.
  SweepResult out{spec, eps.size(), phis.size(), {}};
  out.cells.reserve(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    CellResult r;
    r.epsilon = eps[c / phis.size()];
    r.phi = phis[c % phis.size()];
    r.runs = reps;
    double sum = 0.0;
    for (std::size_t k = 0; k < reps; ++k) sum += d[c * reps + k];
    r.mean_d = sum / static_cast<double>(reps);
    if (reps > 1) {
      double ss = 0.0;
      for (std::size_t k = 0; k < reps; ++k) ss += (d[c * reps + k] - r.mean_d) * (d[c * reps + k] - r.mean_d);
      r.std_d = std::sqrt(ss / static_cast<double>(reps - 1));
    }
    out.cells.push_back(r);
  }
  return out;
}

bool above_alignment_line(double epsilon, double phi) {
  return 10.0 * epsilon + 3.0 * phi >= 3.5 - 1e-9;
}

BoundaryReport boundary_report(const SweepResult& result, double threshold) {
  BoundaryReport rep;
  rep.threshold = threshold;
  for (const auto& cell : result.cells) {
    const bool above = above_alignment_line(cell.epsilon, cell.phi);
    ClassStats& cls = above ? rep.above : rep.below;
    ++cls.cells;
    cls.mean_of_mean_d += cell.mean_d;
    cls.max_mean_d = std::max(cls.max_mean_d, cell.mean_d);
    const bool aligned = cell.mean_d <= threshold;
    if (above != aligned) ++cls.misclassified;
  }
  for (ClassStats* cls : {&rep.above, &rep.below})
    if (cls->cells) cls->mean_of_mean_d /= static_cast<double>(cls->cells);
  const std::size_t total = rep.above.cells + rep.below.cells;
  if (total)
    rep.consistent_fraction =
        1.0 - static_cast<double>(rep.above.misclassified + rep.below.misclassified) / static_cast<double>(total);
  return rep;
}

}  // namespace opact
