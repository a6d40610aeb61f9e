// config.hpp — Flat key-value configuration files for sweeps
//
//     # comment
//     model.type   = tls
//     system.eps_d = -5.4
//     axis1.param  = mu_R
//     axis1.min    = -4.6
//
// One `section.key = value` per line. Unknown keys, duplicates and keys that do not
// belong to the selected model are errors. All physical quantities are in eV.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dar/sweep.hpp"

namespace dar::config {

// Every key accepted in a configuration file.
const std::vector<std::string>& key_registry();

// Closest registered key by edit distance.
std::string nearest_key(std::string_view key);

sweep::SweepSpec parse_config(std::string_view text);
sweep::SweepSpec load_config(const std::filesystem::path& path);

// Text that parse_config turns back into an identical spec.
std::string serialize_config(const sweep::SweepSpec& spec);

// Shortest decimal string that parses back to exactly `v`.
std::string format_double(double v);
std::string format_list(const std::vector<double>& values);

} // namespace dar::config
