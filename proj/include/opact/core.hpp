#pragma once

// Per-step model mathematics: bounded-confidence neighbor selection driven by
// observed actions, opinion fusion, and the utility-maximizing action choice.
// Everything here is a pure function of its arguments.

#include <cstddef>
#include <span>
#include <vector>

#include "opact/graph.hpp"

namespace opact {

struct AgentState {
  double opinion = 0.0;     // private, x
  double action = 0.0;      // public, y
  double openness = 0.0;    // confidence radius, fixed for a run
  double commitment = 0.0;  // weight on own opinion vs. norm, fixed for a run

  friend bool operator==(const AgentState&, const AgentState&) = default;
};

using Population = std::vector<AgentState>;

struct UtilityTerms {
  double updated_opinion = 0.0;  // x_i(t+1)
  double norm = 0.0;             // population mean action at t
  double commitment = 0.0;
};

/// Mean action over the whole population.
double subjective_norm(std::span<const AgentState> agents);

/// Indices j != i, adjacent to i in `graph`, with |x_i - y_j| <= openness.
/// Returned in ascending order.
std::vector<std::size_t> neighbor_set(std::size_t i, std::span<const AgentState> agents,
                                      const Graph& graph, double openness);

/// Average of the neighbors' actions together with the agent's own opinion.
double update_opinion(std::size_t i, std::span<const AgentState> agents,
                      std::span<const std::size_t> neighbors);

/// -phi (y - x_new)^2 - (1 - phi) (y - y_avg)^2
double evaluate_utility(double candidate_action, const UtilityTerms& terms);

/// Closed-form maximizer of evaluate_utility: phi x_new + (1 - phi) y_avg.
double update_action(const UtilityTerms& terms);

/// One synchronous classical bounded-confidence step on opinions alone; the
/// agent always counts itself. Serves as the reference for the phi = 1 case.
std::vector<double> classical_hk_step(std::span<const double> opinions, double epsilon,
                                      const Graph& graph);

}  // namespace opact
