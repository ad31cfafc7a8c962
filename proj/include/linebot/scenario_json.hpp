#pragma once

#include <string>
#include <vector>

#include "linebot/sim_engine.hpp"

namespace linebot {

// Overrides are "dotted.key=value" pairs applied to the parsed document
// before it is interpreted; values parse as JSON, falling back to a string.
// Array elements are addressed by index: "assertions.0.min_fraction=0.9".
Scenario load_scenario_file(const std::string& path, const std::vector<std::string>& overrides = {});

// base_dir anchors relative track paths.
Scenario parse_scenario_json(const std::string& json_text, const std::string& base_dir,
                             const std::vector<std::string>& overrides = {});

}  // namespace linebot
