#include "opact/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "opact/errors.hpp"

namespace opact {

double group_discrepancy(std::span<const double> opinions, std::span<const double> actions) {
  if (opinions.size() != actions.size())
    throw ContractViolation("group_discrepancy: opinion and action lengths differ");
  if (opinions.empty()) throw ContractViolation("group_discrepancy: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < opinions.size(); ++i) sum += std::abs(opinions[i] - actions[i]);
  return sum / static_cast<double>(opinions.size());
}

std::size_t count_clusters(std::span<const double> values, double gap_threshold) {
  if (values.empty()) throw ContractViolation("count_clusters: empty input");
  if (!(gap_threshold > 0.0)) throw ContractViolation("count_clusters: gap threshold must be positive");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t clusters = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] - sorted[i - 1] > gap_threshold) ++clusters;
  return clusters;
}

GroupStats group_stats(std::span<const double> opinions, std::span<const double> actions,
                       double gap_threshold) {
  GroupStats s;
  s.agents = opinions.size();
  s.group_discrepancy = group_discrepancy(opinions, actions);
  for (std::size_t i = 0; i < opinions.size(); ++i)
    s.max_discrepancy = std::max(s.max_discrepancy, std::abs(opinions[i] - actions[i]));
  s.opinion_clusters = count_clusters(opinions, gap_threshold);
  s.action_clusters = count_clusters(actions, gap_threshold);
  return s;
}

RunSummary summarize(const Trajectory& trajectory, double gap_threshold) {
  if (trajectory.opinions.empty()) throw ContractViolation("summarize: empty trajectory");
  RunSummary out;
  out.opinions = trajectory.opinions.back();
  out.actions = trajectory.actions.back();
  out.all = group_stats(out.opinions, out.actions, gap_threshold);

  out.flexible_mask.resize(out.opinions.size());
  std::vector<double> fx, fy;
  for (std::size_t i = 0; i < out.opinions.size(); ++i) {
    out.flexible_mask[i] = !trajectory.innovator[i];
    if (out.flexible_mask[i]) {
      fx.push_back(out.opinions[i]);
      fy.push_back(out.actions[i]);
    }
  }
  if (fx.size() != out.opinions.size() && !fx.empty())
    out.flexible = group_stats(fx, fy, gap_threshold);
  return out;
}

}  // namespace opact
