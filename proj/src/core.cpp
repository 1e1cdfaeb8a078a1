#include "opact/core.hpp"

#include <cmath>
#include <string>

#include "opact/errors.hpp"

namespace opact {

namespace {

void check_index(std::size_t i, std::size_t n) {
  if (i >= n)
    throw ContractViolation("agent index " + std::to_string(i) + " out of range for population of " +
                            std::to_string(n));
}

void check_graph(const Graph& graph, std::size_t n) {
  if (graph.node_count() != n)
    throw ConfigError("graph has " + std::to_string(graph.node_count()) + " nodes, population has " +
                      std::to_string(n));
}

}  // namespace

double subjective_norm(std::span<const AgentState> agents) {
  if (agents.empty()) throw ContractViolation("empty population");
  double sum = 0.0;
  for (const auto& a : agents) sum += a.action;
  return sum / static_cast<double>(agents.size());
}

std::vector<std::size_t> neighbor_set(std::size_t i, std::span<const AgentState> agents,
                                      const Graph& graph, double openness) {
  check_index(i, agents.size());
  check_graph(graph, agents.size());
  const double x = agents[i].opinion;
  std::vector<std::size_t> out;
  for (NodeId j : graph.neighbors(static_cast<NodeId>(i)))
    if (std::abs(x - agents[j].action) <= openness) out.push_back(j);
  return out;
}

double update_opinion(std::size_t i, std::span<const AgentState> agents,
                      std::span<const std::size_t> neighbors) {
  check_index(i, agents.size());
  double sum = 0.0;
  for (std::size_t j : neighbors) {
    check_index(j, agents.size());
    sum += agents[j].action;
  }
  sum += agents[i].opinion;
  return sum / static_cast<double>(neighbors.size() + 1);
}

double evaluate_utility(double candidate_action, const UtilityTerms& terms) {
  const double own = candidate_action - terms.updated_opinion;
  const double social = candidate_action - terms.norm;
  return -terms.commitment * own * own - (1.0 - terms.commitment) * social * social;
}

double update_action(const UtilityTerms& terms) {
  return terms.commitment * terms.updated_opinion + (1.0 - terms.commitment) * terms.norm;
}

std::vector<double> classical_hk_step(std::span<const double> opinions, double epsilon,
                                      const Graph& graph) {
  check_graph(graph, opinions.size());
  std::vector<double> next(opinions.size());
  for (std::size_t i = 0; i < opinions.size(); ++i) {
    double sum = opinions[i];
    std::size_t count = 1;
    for (NodeId j : graph.neighbors(static_cast<NodeId>(i))) {
      if (std::abs(opinions[i] - opinions[j]) <= epsilon) {
        sum += opinions[j];
        ++count;
      }
    }
    next[i] = sum / static_cast<double>(count);
  }
  return next;
}

}  // namespace opact
