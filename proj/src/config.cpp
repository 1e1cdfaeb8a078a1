#include "opact/config.hpp"

#include <algorithm>
#include <initializer_list>
#include <istream>
#include <iterator>
#include <sstream>

#include "opact/errors.hpp"

namespace opact {

using nlohmann::json;

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, std::initializer_list<std::string_view> known,
                    const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ConfigError("unknown key '" + join(where, key) + "'");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(join(where, key) + " missing");
  return *it;
}

double as_real(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field + ": expected a number");
  return v.get<double>();
}

std::uint64_t as_uint(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) throw ConfigError(field + ": expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

Interval as_interval(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) throw ConfigError(field + ": expected [lo, hi]");
  Interval iv{as_real(v[0], field), as_real(v[1], field)};
  if (iv.lo > iv.hi) throw ConfigError(field + ": interval bounds out of order");
  return iv;
}

TraitSpec as_trait(const json& v, const std::string& field) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array()) return as_interval(v, field);
  throw ConfigError(field + ": expected a number or [lo, hi]");
}

json trait_json(const TraitSpec& t) {
  if (const auto* v = std::get_if<double>(&t)) return *v;
  const auto& iv = std::get<Interval>(t);
  return json::array({iv.lo, iv.hi});
}

Topology parse_topology(const json& v, const std::string& field) {
  if (v.is_string()) {
    if (v.get<std::string>() == "complete") return Topology::complete();
    throw ConfigError(field + ": only \"complete\" may be given as a bare string");
  }
  if (!v.is_object()) throw ConfigError(field + ": expected an object");
  const auto type = require(v, "type", field);
  if (!type.is_string()) throw ConfigError(field + ".type: expected a string");
  const auto kind = type.get<std::string>();
  if (kind == "complete") {
    reject_unknown(v, {"type"}, field);
    return Topology::complete();
  }
  if (kind == "small_world") {
    reject_unknown(v, {"type", "k", "p"}, field);
    return Topology::small_world(as_uint(require(v, "k", field), field + ".k"),
                                 as_real(require(v, "p", field), field + ".p"));
  }
  if (kind == "scale_free") {
    reject_unknown(v, {"type", "m0", "m"}, field);
    return Topology::scale_free(as_uint(require(v, "m0", field), field + ".m0"),
                                as_uint(require(v, "m", field), field + ".m"));
  }
  if (kind == "edge_list") {
    reject_unknown(v, {"type", "path"}, field);
    const auto& path = require(v, "path", field);
    if (!path.is_string()) throw ConfigError(field + ".path: expected a string");
    return Topology::edge_list(path.get<std::string>());
  }
  throw ConfigError(field + ".type: unknown topology '" + kind + "'");
}

json topology_json(const Topology& t) {
  switch (t.kind) {
    case Topology::Kind::complete:
      return {{"type", "complete"}};
    case Topology::Kind::small_world:
      return {{"type", "small_world"}, {"k", t.k}, {"p", t.p}};
    case Topology::Kind::scale_free:
      return {{"type", "scale_free"}, {"m0", t.m0}, {"m", t.m}};
    case Topology::Kind::edge_list:
      return {{"type", "edge_list"}, {"path", t.path}};
  }
  return nullptr;
}

MinoritySpec parse_minority(const json& v, const std::string& field) {
  if (!v.is_object()) throw ConfigError(field + ": expected an object");
  reject_unknown(v, {"fraction", "count", "openness", "commitment", "opinion"}, field);
  MinoritySpec m;
  if (v.contains("fraction")) m.fraction = as_real(v["fraction"], field + ".fraction");
  if (v.contains("count")) m.count = as_uint(v["count"], field + ".count");
  if (v.contains("openness")) m.openness = as_real(v["openness"], field + ".openness");
  if (v.contains("commitment")) m.commitment = as_real(v["commitment"], field + ".commitment");
  if (v.contains("opinion")) m.opinion = as_real(v["opinion"], field + ".opinion");
  return m;
}

// `traits_required` is false for a sweep's base scenario, whose openness and
// commitment come from the grid.
ScenarioConfig parse_scenario(const json& doc, const std::string& where, bool traits_required) {
  if (!doc.is_object()) throw ConfigError((where.empty() ? "document" : where) + ": expected an object");
  reject_unknown(doc,
                 {"kind", "n", "horizon", "seed", "topology", "opinion_init", "openness", "commitment",
                  "minority", "convergence_tol"},
                 where);
  ScenarioConfig c;
  c.n = as_uint(require(doc, "n", where), join(where, "n"));
  if (doc.contains("horizon")) c.horizon = as_uint(doc["horizon"], join(where, "horizon"));
  if (doc.contains("seed")) c.seed = as_uint(doc["seed"], join(where, "seed"));
  if (doc.contains("topology")) c.topology = parse_topology(doc["topology"], join(where, "topology"));
  if (doc.contains("opinion_init"))
    c.opinion_init = as_interval(doc["opinion_init"], join(where, "opinion_init"));
  if (traits_required || doc.contains("openness"))
    c.openness = as_trait(require(doc, "openness", where), join(where, "openness"));
  if (traits_required || doc.contains("commitment"))
    c.commitment = as_trait(require(doc, "commitment", where), join(where, "commitment"));
  if (doc.contains("minority")) c.minority = parse_minority(doc["minority"], join(where, "minority"));
  if (doc.contains("convergence_tol"))
    c.convergence_tol = as_real(doc["convergence_tol"], join(where, "convergence_tol"));
  return c;
}

GridAxis parse_axis(const json& v, const std::string& field) {
  if (!v.is_object()) throw ConfigError(field + ": expected {min, max, step}");
  reject_unknown(v, {"min", "max", "step"}, field);
  return {as_real(require(v, "min", field), field + ".min"), as_real(require(v, "max", field), field + ".max"),
          as_real(require(v, "step", field), field + ".step")};
}

SweepSpec parse_sweep(const json& doc) {
  reject_unknown(doc, {"kind", "seed", "epsilon", "phi", "runs_per_cell", "base"}, "");
  SweepSpec s;
  if (doc.contains("seed")) s.seed = as_uint(doc["seed"], "seed");
  if (doc.contains("epsilon")) s.epsilon = parse_axis(doc["epsilon"], "epsilon");
  if (doc.contains("phi")) s.phi = parse_axis(doc["phi"], "phi");
  if (doc.contains("runs_per_cell")) s.runs_per_cell = as_uint(doc["runs_per_cell"], "runs_per_cell");
  s.base = parse_scenario(require(doc, "base", ""), "base", false);
  if (s.base.seed != 0) throw ConfigError("base.seed: set the sweep seed instead");
  s.validate();
  return s;
}

json axis_json(const GridAxis& a) { return {{"min", a.min}, {"max", a.max}, {"step", a.step}}; }

}  // namespace

ExperimentSpec parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("document: expected an object");
  std::string kind = "scenario";
  if (doc.contains("kind")) {
    if (!doc["kind"].is_string()) throw ConfigError("kind: expected \"scenario\" or \"sweep\"");
    kind = doc["kind"].get<std::string>();
  }
  if (kind == "sweep") return parse_sweep(doc);
  if (kind != "scenario") throw ConfigError("kind: expected \"scenario\" or \"sweep\"");
  ScenarioConfig c = parse_scenario(doc, "", true);
  c.validate();
  return c;
}

ExperimentSpec parse_config(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_config(std::string_view(text));
}

json to_json(const ScenarioConfig& c) {
  json doc = {{"kind", "scenario"},
              {"n", c.n},
              {"horizon", c.horizon},
              {"seed", c.seed},
              {"topology", topology_json(c.topology)},
              {"opinion_init", json::array({c.opinion_init.lo, c.opinion_init.hi})},
              {"openness", trait_json(c.openness)},
              {"commitment", trait_json(c.commitment)},
              {"convergence_tol", c.convergence_tol}};
  if (c.minority) {
    const auto& m = *c.minority;
    json mj = {{"openness", m.openness}, {"commitment", m.commitment}, {"opinion", m.opinion}};
    if (m.fraction) mj["fraction"] = *m.fraction;
    if (m.count) mj["count"] = *m.count;
    doc["minority"] = mj;
  }
  return doc;
}

json to_json(const SweepSpec& s) {
  json base = to_json(s.base);
  base.erase("kind");
  base.erase("openness");
  base.erase("commitment");
  base.erase("seed");
  return {{"kind", "sweep"},
          {"seed", s.seed},
          {"epsilon", axis_json(s.epsilon)},
          {"phi", axis_json(s.phi)},
          {"runs_per_cell", s.runs_per_cell},
          {"base", base}};
}

json to_json(const ExperimentSpec& spec) {
  return std::visit([](const auto& s) { return to_json(s); }, spec);
}

// ---------------------------------------------------------------------------
// Presets. Every figure scenario uses n = 300 and T = 50 with opinions drawn
// from U[0,1] and actions starting at the opinions.

namespace {

ScenarioConfig homogeneous(double epsilon, double phi) {
  ScenarioConfig c;
  c.n = 300;
  c.horizon = 50;
  c.openness = epsilon;
  c.commitment = phi;
  return c;
}

// 20% innovators pinned at 1; flexible agents start in [0, 0.5].
ScenarioConfig with_innovators(Interval openness, Interval commitment) {
  ScenarioConfig c;
  c.n = 300;
  c.horizon = 50;
  c.opinion_init = {0.0, 0.5};
  c.openness = openness;
  c.commitment = commitment;
  MinoritySpec m;
  m.fraction = 0.2;
  c.minority = m;
  return c;
}

SweepSpec full_sweep() {
  SweepSpec s;
  s.base = homogeneous(0.0, 0.0);
  return s;
}

SweepSpec desk_sweep() {
  SweepSpec s;
  s.epsilon = {0.0, 0.5, 0.1};
  s.phi = {0.0, 1.0, 0.1};
  s.runs_per_cell = 5;
  s.base = homogeneous(0.0, 0.0);
  s.base.n = 100;
  return s;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig3",  "fig4",  "fig5",  "fig6",  "fig8",  "fig9",
                                                 "fig10", "fig11", "fig12", "sweep", "sweep-desk"};
  return names;
}

bool is_preset(std::string_view name) {
  const auto& names = preset_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

ExperimentSpec expand_preset(std::string_view name) {
  if (name == "fig3") return homogeneous(0.1, 0.3);
  if (name == "fig4") return homogeneous(0.1, 0.7);
  if (name == "fig5") return homogeneous(0.25, 0.3);
  if (name == "fig6") return homogeneous(0.25, 0.7);
  if (name == "fig8") {
    auto c = homogeneous(0.25, 0.7);
    c.topology = Topology::small_world(6, 0.8);
    return c;
  }
  if (name == "fig9") {
    auto c = homogeneous(0.25, 0.7);
    c.topology = Topology::scale_free(9, 6);
    return c;
  }
  if (name == "fig10") return with_innovators({0.25, 0.3}, {0.7, 0.8});
  if (name == "fig11") return with_innovators({0.05, 0.1}, {0.7, 0.8});
  if (name == "fig12") return with_innovators({0.05, 0.1}, {0.1, 0.2});
  if (name == "sweep") return full_sweep();
  if (name == "sweep-desk") return desk_sweep();
  throw ConfigError("unknown preset '" + std::string(name) + "'");
}

}  // namespace opact
