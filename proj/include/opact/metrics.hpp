#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opact/engine.hpp"

namespace opact {

inline constexpr double kDefaultClusterGap = 0.01;

/// Mean of |x_i - y_i|.
double group_discrepancy(std::span<const double> opinions, std::span<const double> actions);

/// Sorted-gap clustering: a new cluster starts wherever consecutive sorted
/// values differ by more than gap_threshold.
std::size_t count_clusters(std::span<const double> values, double gap_threshold = kDefaultClusterGap);

struct GroupStats {
  std::size_t agents = 0;
  double group_discrepancy = 0.0;
  double max_discrepancy = 0.0;
  std::size_t opinion_clusters = 0;
  std::size_t action_clusters = 0;
};

GroupStats group_stats(std::span<const double> opinions, std::span<const double> actions,
                       double gap_threshold = kDefaultClusterGap);

struct RunSummary {
  GroupStats all;
  std::optional<GroupStats> flexible;  // non-innovators, when a minority exists
  std::vector<double> opinions;        // final snapshot
  std::vector<double> actions;
  std::vector<bool> flexible_mask;
};

RunSummary summarize(const Trajectory& trajectory, double gap_threshold = kDefaultClusterGap);

}  // namespace opact
