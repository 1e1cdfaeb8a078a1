// opact: run scenarios and sweeps, generate networks.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opact/config.hpp"
#include "opact/errors.hpp"
#include "opact/graph.hpp"
#include "opact/metrics.hpp"
#include "opact/output.hpp"
#include "opact/rng.hpp"
#include "opact/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace opact;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct CommonOptions {
  std::string target;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  int threads = 1;
  std::optional<double> tol;
  double cluster_gap = kDefaultClusterGap;
};

ExperimentSpec load(const CommonOptions& opt) {
  std::string source = !opt.config.empty() ? opt.config : opt.target;
  if (!opt.config.empty() && !opt.target.empty())
    throw ConfigError("give either a preset/config positional or --config, not both");
  if (source.empty()) throw ConfigError("missing preset name or --config PATH");
  if (is_preset(source)) return expand_preset(source);
  std::ifstream in(source);
  if (!in) {
    if (!fs::exists(source))
      throw ConfigError("'" + source + "' is neither a preset nor an existing config file");
    throw IoError("cannot read " + source);
  }
  return parse_config(in);
}

fs::path prepare_dir(const std::string& out) {
  std::error_code ec;
  fs::create_directories(out, ec);
  if (ec) throw IoError("cannot create output directory " + out + ": " + ec.message());
  return fs::path(out);
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path.string());
  return f;
}

void close_out(std::ofstream& f, const fs::path& path) {
  f.close();
  if (!f) throw IoError("failed writing " + path.string());
}

void set_threads(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(std::max(threads, 1));
#else
  (void)threads;
#endif
}

int cmd_run(const CommonOptions& opt) {
  ExperimentSpec spec = load(opt);
  auto* config = std::get_if<ScenarioConfig>(&spec);
  if (!config) throw ConfigError("run expects a scenario, got a sweep; use the sweep command");
  if (opt.seed) config->seed = *opt.seed;
  if (opt.tol) config->convergence_tol = *opt.tol;
  config->validate();

  set_threads(opt.threads);
  const Trajectory traj = run(*config, opt.threads > 1 ? StepKernel::parallel : StepKernel::serial);
  const RunSummary summary = summarize(traj, opt.cluster_gap);

  const fs::path dir = prepare_dir(opt.out);
  {
    auto path = dir / "trajectory.csv";
    auto f = open_out(path);
    write_trajectory_csv(traj, f);
    close_out(f, path);
  }
  {
    auto path = dir / "summary.json";
    auto f = open_out(path);
    f << summary_json(traj, summary, opt.cluster_gap).dump(2) << '\n';
    close_out(f, path);
  }
  if (config->topology.kind != Topology::Kind::complete) {
    auto path = dir / "graph.edges";
    auto f = open_out(path);
    write_edge_list(build_population(*config).graph, f);
    close_out(f, path);
  }
  std::cout << digest(summary) << " steps=" << traj.final_step() << " stop=" << to_string(traj.stop_reason)
            << '\n';
  return 0;
}

int cmd_sweep(const CommonOptions& opt) {
  ExperimentSpec spec = load(opt);
  auto* sweep = std::get_if<SweepSpec>(&spec);
  if (!sweep) throw ConfigError("sweep expects a sweep document or preset");
  if (opt.seed) sweep->seed = *opt.seed;
  if (opt.tol) sweep->base.convergence_tol = *opt.tol;
  sweep->validate();

  const SweepResult result = run_sweep(*sweep, opt.threads);
  const BoundaryReport report = boundary_report(result);

  const fs::path dir = prepare_dir(opt.out);
  {
    auto path = dir / "sweep.csv";
    auto f = open_out(path);
    write_sweep_csv(result, f);
    close_out(f, path);
  }
  {
    auto path = dir / "boundary_report.json";
    auto f = open_out(path);
    f << boundary_json(report, result).dump(2) << '\n';
    close_out(f, path);
  }
  std::cout << "cells=" << result.cells.size() << " above=" << report.above.cells
            << " (misclassified " << report.above.misclassified << ") below=" << report.below.cells
            << " (misclassified " << report.below.misclassified
            << ") consistent=" << format_real(report.consistent_fraction) << '\n';
  return 0;
}

std::uint64_t to_count(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || s[0] == '-')
    throw ConfigError(std::string(what) + ": expected a nonnegative integer, got '" + s + "'");
  return v;
}

double to_real(const std::string& s, const char* what) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) throw ConfigError(std::string(what) + ": expected a number, got '" + s + "'");
  return v;
}

int cmd_netgen(const std::vector<std::string>& args, std::uint64_t seed, const std::string& out) {
  if (args.empty()) throw ConfigError("netgen: missing topology (complete | sw | sf)");
  const std::string& kind = args[0];
  auto expect = [&](std::size_t count, const char* usage) {
    if (args.size() != count + 1) throw ConfigError(std::string("usage: netgen ") + usage);
  };
  Rng rng(derive_seed(seed, "topology"));
  std::optional<Graph> g;
  if (kind == "complete") {
    expect(1, "complete N");
    g = complete_graph(to_count(args[1], "n"));
  } else if (kind == "sw") {
    expect(3, "sw N K P");
    g = watts_strogatz(to_count(args[1], "n"), to_count(args[2], "k"), to_real(args[3], "p"), rng);
  } else if (kind == "sf") {
    expect(3, "sf N M0 M");
    g = barabasi_albert(to_count(args[1], "n"), to_count(args[2], "m0"), to_count(args[3], "m"), rng);
  } else {
    throw ConfigError("netgen: unknown topology '" + kind + "'");
  }

  const fs::path path(out);
  if (path.has_parent_path()) prepare_dir(path.parent_path().string());
  auto f = open_out(path);
  write_edge_list(*g, f);
  close_out(f, path);
  std::cout << "nodes=" << g->node_count() << " edges=" << g->edge_count() << " max_degree=" << g->max_degree()
            << " components=" << g->component_count() << '\n';
  return 0;
}

int cmd_show(const std::string& name) {
  if (!is_preset(name)) throw ConfigError("unknown preset '" + name + "'");
  std::cout << to_json(expand_preset(name)).dump(2) << '\n';
  return 0;
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("target", opt.target, "Preset name or config file path");
  cmd->add_option("--config", opt.config, "Preset name or config file path");
  cmd->add_option("--seed", opt.seed, "Master seed (overrides the document; presets default to 0)");
  cmd->add_option("--out", opt.out, "Output directory")->capture_default_str();
  cmd->add_option("-j,--jobs", opt.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  cmd->add_option("--tol", opt.tol, "Early-stop tolerance on the per-step change (0 = fixed horizon)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--cluster-gap", opt.cluster_gap, "Gap threshold for cluster counting")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opinion-action coevolution simulator"};
  app.require_subcommand(1);

  CommonOptions run_opt, sweep_opt;
  auto* run_cmd = app.add_subcommand("run", "Run one scenario and write trajectory.csv + summary.json");
  add_common(run_cmd, run_opt);
  auto* sweep_cmd = app.add_subcommand("sweep", "Run an (epsilon, phi) sweep and write sweep.csv + boundary_report.json");
  add_common(sweep_cmd, sweep_opt);

  std::vector<std::string> net_args;
  std::uint64_t net_seed = 0;
  std::string net_out = "graph.edges";
  auto* net_cmd = app.add_subcommand("netgen", "Generate a network: complete N | sw N K P | sf N M0 M");
  net_cmd->add_option("args", net_args, "Topology and parameters")->required();
  net_cmd->add_option("--seed", net_seed, "Generator seed")->capture_default_str();
  net_cmd->add_option("--out", net_out, "Edge-list output path")->capture_default_str();

  std::string show_name;
  auto* show_cmd = app.add_subcommand("show", "Print a preset as a config document");
  show_cmd->add_option("preset", show_name)->required();

  app.add_subcommand("presets", "List preset names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run_cmd) return cmd_run(run_opt);
    if (*sweep_cmd) return cmd_sweep(sweep_opt);
    if (*net_cmd) return cmd_netgen(net_args, net_seed, net_out);
    if (*show_cmd) return cmd_show(show_name);
    for (const auto& name : preset_names()) std::cout << name << '\n';
    return 0;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
