#include "opact/engine.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>

#include "opact/errors.hpp"
#include "opact/rng.hpp"

namespace opact {

Topology Topology::small_world(std::size_t k, double p) {
  Topology t;
  t.kind = Kind::small_world;
  t.k = k;
  t.p = p;
  return t;
}

Topology Topology::scale_free(std::size_t m0, std::size_t m) {
  Topology t;
  t.kind = Kind::scale_free;
  t.m0 = m0;
  t.m = m;
  return t;
}

Topology Topology::edge_list(std::string path) {
  Topology t;
  t.kind = Kind::edge_list;
  t.path = std::move(path);
  return t;
}

std::size_t MinoritySpec::size(std::size_t n) const {
  if (count) return *count;
  // Absorb representation error, e.g. 0.29 * 100 = 28.999999999999996.
  return static_cast<std::size_t>(std::floor(fraction.value_or(0.0) * static_cast<double>(n) + 1e-9));
}

namespace {

bool in_unit(double v) { return v >= 0.0 && v <= 1.0; }

void check_unit(double v, const std::string& field) {
  if (!in_unit(v)) throw ConfigError(field + ": value " + std::to_string(v) + " outside [0,1]");
}

void check_interval(const Interval& iv, const std::string& field) {
  check_unit(iv.lo, field);
  check_unit(iv.hi, field);
  if (iv.lo > iv.hi) throw ConfigError(field + ": interval bounds out of order");
}

void check_trait(const TraitSpec& t, const std::string& field) {
  if (const auto* v = std::get_if<double>(&t))
    check_unit(*v, field);
  else
    check_interval(std::get<Interval>(t), field);
}

double draw(const TraitSpec& t, Rng& rng) {
  if (const auto* v = std::get_if<double>(&t)) return *v;
  const auto& iv = std::get<Interval>(t);
  return uniform(rng, iv.lo, iv.hi);
}

Graph build_topology(const ScenarioConfig& config) {
  Rng rng(derive_seed(config.seed, "topology"));
  const auto& topo = config.topology;
  switch (topo.kind) {
    case Topology::Kind::complete:
      return complete_graph(config.n);
    case Topology::Kind::small_world:
      return watts_strogatz(config.n, topo.k, topo.p, rng);
    case Topology::Kind::scale_free:
      return barabasi_albert(config.n, topo.m0, topo.m, rng);
    case Topology::Kind::edge_list: {
      std::ifstream in(topo.path);
      if (!in) throw IoError("cannot open edge list " + topo.path);
      Graph g = read_edge_list(in);
      if (g.node_count() != config.n)
        throw ConfigError("topology.path: edge list has " + std::to_string(g.node_count()) +
                          " nodes, n is " + std::to_string(config.n));
      return g;
    }
  }
  throw ConfigError("topology: unknown kind");
}

// Fused neighbor filter + fusion for agent i. Neighbors are summed in
// ascending index order and the own opinion last, matching
// update_opinion(i, agents, neighbor_set(...)) bit for bit.
inline double fused_opinion(std::size_t i, const Population& pop, const Graph& graph) {
  const double x = pop[i].opinion;
  const double eps = pop[i].openness;
  double sum = 0.0;
  std::size_t count = 0;
  for (NodeId j : graph.neighbors(static_cast<NodeId>(i))) {
    const double y = pop[j].action;
    if (std::abs(x - y) <= eps) {
      sum += y;
      ++count;
    }
  }
  sum += x;
  return sum / static_cast<double>(count + 1);
}

void check_sizes(const Population& pop, const Graph& graph) {
  if (pop.empty()) throw ContractViolation("empty population");
  if (graph.node_count() != pop.size())
    throw ConfigError("graph has " + std::to_string(graph.node_count()) + " nodes, population has " +
                      std::to_string(pop.size()));
}

}  // namespace

void ScenarioConfig::validate() const {
  if (n < 1) throw ConfigError("n: must be at least 1");
  if (n > UINT32_MAX) throw ConfigError("n: too large");
  if (!(convergence_tol >= 0.0) || !std::isfinite(convergence_tol))
    throw ConfigError("convergence_tol: must be a finite nonnegative number");
  check_interval(opinion_init, "opinion_init");
  check_trait(openness, "openness");
  check_trait(commitment, "commitment");
  if (minority) {
    const auto& m = *minority;
    if (m.fraction.has_value() == m.count.has_value())
      throw ConfigError("minority: exactly one of fraction or count is required");
    if (m.fraction && !in_unit(*m.fraction)) throw ConfigError("minority.fraction: outside [0,1]");
    if (m.size(n) >= n) throw ConfigError("minority: count must be less than n");
    check_unit(m.openness, "minority.openness");
    check_unit(m.commitment, "minority.commitment");
    check_unit(m.opinion, "minority.opinion");
  }
  switch (topology.kind) {
    case Topology::Kind::complete:
      break;
    case Topology::Kind::small_world:
      if (topology.k < 2) throw ConfigError("topology.k: must be at least 2");
      if (topology.k % 2 != 0) throw ConfigError("topology.k: k must be even");
      if (n <= topology.k) throw ConfigError("topology.k: n must exceed k");
      if (!in_unit(topology.p)) throw ConfigError("topology.p: outside [0,1]");
      break;
    case Topology::Kind::scale_free:
      if (topology.m < 1) throw ConfigError("topology.m: must be at least 1");
      if (topology.m0 < topology.m) throw ConfigError("topology.m0: must be at least m");
      if (n < topology.m0) throw ConfigError("topology.m0: must not exceed n");
      break;
    case Topology::Kind::edge_list:
      if (topology.path.empty()) throw ConfigError("topology.path: missing");
      break;
  }
}

Scenario build_population(const ScenarioConfig& config) {
  config.validate();
  Rng opinion_rng(derive_seed(config.seed, "opinion"));
  Rng openness_rng(derive_seed(config.seed, "openness"));
  Rng commitment_rng(derive_seed(config.seed, "commitment"));

  const std::size_t committed = config.minority ? config.minority->size(config.n) : 0;
  Scenario s{Population(config.n), build_topology(config), std::vector<bool>(config.n, false)};
  for (std::size_t i = 0; i < config.n; ++i) {
    AgentState& a = s.population[i];
    if (i < committed) {
      const auto& m = *config.minority;
      a.opinion = m.opinion;
      a.openness = m.openness;
      a.commitment = m.commitment;
      s.innovator[i] = true;
    } else {
      a.opinion = uniform(opinion_rng, config.opinion_init.lo, config.opinion_init.hi);
      a.openness = draw(config.openness, openness_rng);
      a.commitment = draw(config.commitment, commitment_rng);
    }
    a.action = a.opinion;
  }
  return s;
}

Population step(const Population& population, const Graph& graph) {
  check_sizes(population, graph);
  const double norm = subjective_norm(population);
  Population next = population;
  const std::size_t n = population.size();
  for (std::size_t i = 0; i < n; ++i) next[i].opinion = fused_opinion(i, population, graph);
  for (std::size_t i = 0; i < n; ++i)
    next[i].action = update_action({next[i].opinion, norm, next[i].commitment});
  return next;
}

Population step_parallel(const Population& population, const Graph& graph) {
  check_sizes(population, graph);
  const double norm = subjective_norm(population);
  Population next = population;
  const auto n = static_cast<std::ptrdiff_t>(population.size());
#pragma omp parallel
  {
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) next[i].opinion = fused_opinion(i, population, graph);
    // implicit barrier: every opinion is final before any action is chosen
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      next[i].action = update_action({next[i].opinion, norm, next[i].commitment});
  }
  return next;
}

void Trajectory::record(const Population& population) {
  const std::size_t n = population.size();
  std::vector<double> x(n), y(n), d(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = population[i].opinion;
    y[i] = population[i].action;
    d[i] = std::abs(x[i] - y[i]);
  }
  norm.push_back(subjective_norm(population));
  opinions.push_back(std::move(x));
  actions.push_back(std::move(y));
  discrepancy.push_back(std::move(d));
}

Trajectory run(const ScenarioConfig& config, StepKernel kernel) {
  Scenario s = build_population(config);
  Trajectory traj;
  traj.config = config;
  traj.innovator = s.innovator;
  traj.component_count = s.graph.component_count();
  traj.opinions.reserve(config.horizon + 1);
  traj.actions.reserve(config.horizon + 1);
  traj.discrepancy.reserve(config.horizon + 1);
  traj.record(s.population);

  Population current = std::move(s.population);
  for (std::size_t t = 0; t < config.horizon; ++t) {
    Population next =
        kernel == StepKernel::parallel ? step_parallel(current, s.graph) : step(current, s.graph);
    double change = 0.0;
    for (std::size_t i = 0; i < next.size(); ++i) {
      change = std::max(change, std::abs(next[i].opinion - current[i].opinion));
      change = std::max(change, std::abs(next[i].action - current[i].action));
    }
    traj.record(next);
    current = std::move(next);
    if (config.convergence_tol > 0.0 && change < config.convergence_tol) {
      traj.stop_reason = StopReason::converged;
      break;
    }
  }
  return traj;
}

const char* to_string(StopReason reason) {
  return reason == StopReason::converged ? "converged" : "horizon";
}

}  // namespace opact
