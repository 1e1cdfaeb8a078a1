#pragma once

// JSON configuration documents and the named figure presets.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "opact/engine.hpp"
#include "opact/sweep.hpp"

namespace opact {

using ExperimentSpec = std::variant<ScenarioConfig, SweepSpec>;

/// Parses a scenario document, or a sweep document when "kind" is "sweep".
/// Syntax errors throw ParseError with the byte offset; semantic errors throw
/// ConfigError naming the field. Unknown keys are rejected.
ExperimentSpec parse_config(std::istream& in);
ExperimentSpec parse_config(std::string_view text);

nlohmann::json to_json(const ScenarioConfig& config);
nlohmann::json to_json(const SweepSpec& spec);
nlohmann::json to_json(const ExperimentSpec& spec);

const std::vector<std::string>& preset_names();
bool is_preset(std::string_view name);
/// Throws ConfigError for an unknown name.
ExperimentSpec expand_preset(std::string_view name);

}  // namespace opact
