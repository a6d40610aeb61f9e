// presets.hpp — Self-contained sweep scenarios behind each published figure panel
//
// Unpublished temperatures are fixed choices; see the README for the table.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dar/sweep.hpp"

namespace dar::presets {

struct ScenarioPreset {
    std::string id;
    std::string description;
    sweep::SweepSpec spec;
};

const std::vector<std::string>& preset_ids();

// Throws ConfigError for an unknown id, suggesting the closest one.
ScenarioPreset make_preset(std::string_view id);

} // namespace dar::presets
