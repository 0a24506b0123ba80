#pragma once

#include <string>

#include "neorl/harness.hpp"

namespace neorl {

// JSON configuration with keys mirroring ExperimentConfig. Unknown keys are
// rejected. `seeds` is either an explicit array or a count expanding to
// 1..count. When preset is "custom" a `network` object describes the wiring.
ExperimentConfig parse_config_json(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

// Canonical form: seeds always explicit, only engaged overrides emitted.
// parse(dump(c)) == c.
std::string dump_config_json(const ExperimentConfig& config, int indent = 2);

}  // namespace neorl
