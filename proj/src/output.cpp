#include "opact/output.hpp"

#include <cstdio>
#include <ostream>

#include "opact/config.hpp"

namespace opact {

using nlohmann::json;

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
  out << "step,agent,opinion,action,discrepancy\n";
  for (std::size_t t = 0; t < trajectory.opinions.size(); ++t) {
    for (std::size_t i = 0; i < trajectory.agent_count(); ++i) {
      out << t << ',' << i << ',' << format_real(trajectory.opinions[t][i]) << ','
          << format_real(trajectory.actions[t][i]) << ',' << format_real(trajectory.discrepancy[t][i])
          << '\n';
    }
  }
}

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
  out << "epsilon,phi,mean_D,std_D,runs\n";
  for (const auto& c : result.cells)
    out << format_real(c.epsilon) << ',' << format_real(c.phi) << ',' << format_real(c.mean_d) << ','
        << format_real(c.std_d) << ',' << c.runs << '\n';
}

namespace {

json stats_json(const GroupStats& s) {
  return {{"agents", s.agents},
          {"group_discrepancy", s.group_discrepancy},
          {"max_discrepancy", s.max_discrepancy},
          {"opinion_clusters", s.opinion_clusters},
          {"action_clusters", s.action_clusters}};
}

json class_json(const ClassStats& c) {
  return {{"cells", c.cells},
          {"mean_of_mean_D", c.mean_of_mean_d},
          {"max_mean_D", c.max_mean_d},
          {"misclassified", c.misclassified}};
}

}  // namespace

json summary_json(const Trajectory& trajectory, const RunSummary& summary, double cluster_gap) {
  json doc = {{"config", to_json(trajectory.config)},
              {"seed", trajectory.config.seed},
              {"steps", trajectory.final_step()},
              {"stop_reason", to_string(trajectory.stop_reason)},
              {"graph_components", trajectory.component_count},
              {"cluster_gap", cluster_gap},
              {"final_norm", trajectory.norm.back()},
              {"all", stats_json(summary.all)}};
  doc["flexible"] = summary.flexible ? stats_json(*summary.flexible) : json(nullptr);
  return doc;
}

json boundary_json(const BoundaryReport& report, const SweepResult& result) {
  return {{"rule", "10*epsilon + 3*phi >= 3.5"},
          {"threshold", report.threshold},
          {"above", class_json(report.above)},
          {"below", class_json(report.below)},
          {"consistent_fraction", report.consistent_fraction},
          {"spec", to_json(result.spec)}};
}

std::string digest(const RunSummary& s) {
  std::string line = "D=" + format_real(s.all.group_discrepancy) +
                     " max_d=" + format_real(s.all.max_discrepancy) +
                     " opinion_clusters=" + std::to_string(s.all.opinion_clusters) +
                     " action_clusters=" + std::to_string(s.all.action_clusters);
  if (s.flexible)
    line += " flexible_D=" + format_real(s.flexible->group_discrepancy) +
            " flexible_opinion_clusters=" + std::to_string(s.flexible->opinion_clusters);
  return line;
}

}  // namespace opact
