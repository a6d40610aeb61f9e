// output.hpp — CSV tables and provenance sidecars for sweep results
//
// Data files are deterministic: fixed column order, shortest round-trip
// decimals, no timestamps. Provenance goes to a JSON sidecar with the same
// basename and a `.meta` extension.

#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dar/sweep.hpp"

namespace dar::output {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::string> units; // "name=unit" entries for the header comment
    std::vector<std::vector<std::string>> rows;
};

// Short column label of an axis parameter ("w" for omega0).
std::string axis_label(ParamId id);

// Population column names: p1, p2 (donor, acceptor) or p_0 ... p_A1.
std::vector<std::string> population_names(ModelId model);

// Component names of a sweep (p1, p2 / p_0 ... p_A1 / I / t_opt, I_opt, kind).
std::vector<std::string> component_names(const sweep::SweepSpec& spec);

// One-axis time-resolved sweeps with few axis values become one column per
// (component, axis value); everything else is a long table with axis columns.
bool use_wide_layout(const sweep::SweepSpec& spec);

Table to_table(const sweep::SweepResult& result);

// RFC 4180 quoting: fields with commas, quotes or line breaks are quoted.
std::string csv_field(std::string_view s);
void write_csv(std::ostream& out, const Table& table);

// JSON provenance: version, timestamp, origin, configuration echo, failed cells.
std::string provenance_json(const sweep::SweepResult& result, std::string_view origin);

std::filesystem::path meta_path(const std::filesystem::path& data_path);

// Writes the CSV and its `.meta` sidecar.
void write_result(const sweep::SweepResult& result, const std::filesystem::path& path, std::string_view origin);

} // namespace dar::output
