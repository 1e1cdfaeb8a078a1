#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "opact/core.hpp"
#include "opact/graph.hpp"

namespace opact {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A trait is either one value shared by every flexible agent or a uniform
/// interval sampled per agent.
using TraitSpec = std::variant<double, Interval>;

struct Topology {
  enum class Kind { complete, small_world, scale_free, edge_list };

  Kind kind = Kind::complete;
  std::size_t k = 6;     // small_world: lattice degree
  double p = 0.0;        // small_world: rewiring probability
  std::size_t m0 = 9;    // scale_free: seed clique size
  std::size_t m = 6;     // scale_free: links per new node
  std::string path;      // edge_list

  static Topology complete() { return {}; }
  static Topology small_world(std::size_t k, double p);
  static Topology scale_free(std::size_t m0, std::size_t m);
  static Topology edge_list(std::string path);

  friend bool operator==(const Topology&, const Topology&) = default;
};

/// Committed agents placed at the lowest indices. Exactly one of
/// fraction / count is set.
struct MinoritySpec {
  std::optional<double> fraction;
  std::optional<std::size_t> count;
  double openness = 0.0;
  double commitment = 1.0;
  double opinion = 1.0;

  std::size_t size(std::size_t n) const;

  friend bool operator==(const MinoritySpec&, const MinoritySpec&) = default;
};

struct ScenarioConfig {
  std::size_t n = 300;
  std::size_t horizon = 50;
  std::uint64_t seed = 0;
  Topology topology;
  Interval opinion_init{0.0, 1.0};
  TraitSpec openness = 0.0;
  TraitSpec commitment = 0.0;
  std::optional<MinoritySpec> minority;
  double convergence_tol = 0.0;  // 0 disables early stop

  /// Throws ConfigError naming the offending field.
  void validate() const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

struct Scenario {
  Population population;
  Graph graph;
  std::vector<bool> innovator;  // true for minority agents
};

/// Draws the initial population and builds the topology. Every random
/// consumer (opinions, openness, commitment, topology) has its own stream
/// derived from config.seed.
Scenario build_population(const ScenarioConfig& config);

/// Reference two-phase update: all new opinions from time-t state, then all
/// new actions from the new opinions and the time-t norm.
Population step(const Population& population, const Graph& graph);

/// Same update with both phases split across OpenMP threads. Bit-identical
/// to step().
Population step_parallel(const Population& population, const Graph& graph);

enum class StepKernel { serial, parallel };
enum class StopReason { horizon, converged };

struct Trajectory {
  ScenarioConfig config;
  std::vector<std::vector<double>> opinions;  // [t][agent]
  std::vector<std::vector<double>> actions;
  std::vector<std::vector<double>> discrepancy;
  std::vector<double> norm;  // mean action at each t
  std::vector<bool> innovator;
  StopReason stop_reason = StopReason::horizon;
  std::size_t component_count = 1;

  std::size_t agent_count() const { return innovator.size(); }
  std::size_t final_step() const { return opinions.size() - 1; }

  void record(const Population& population);
};

Trajectory run(const ScenarioConfig& config, StepKernel kernel = StepKernel::serial);

const char* to_string(StopReason reason);

}  // namespace opact
