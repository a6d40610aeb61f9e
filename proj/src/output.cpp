// output.cpp — Table layout and serialisation

#include "dar/output.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <Eigen/Core>
#include <json.hpp>

#include "dar/config.hpp"
#include "dar/errors.hpp"

namespace dar::output {

namespace {

constexpr std::size_t kWideLimit = 8;

std::string number(double v) {
    return std::isfinite(v) ? config::format_double(v) : std::string{};
}

std::string unit_of(ParamId id) {
    return id == ParamId::lambda ? "1" : "eV";
}

std::vector<std::string> base_units(const sweep::SweepSpec& spec) {
    std::vector<std::string> u;
    if (spec.time_resolved() || spec.observable.kind == sweep::ObservableKind::optimal_time)
        u.push_back("t=hbar/eV");
    switch (spec.observable.kind) {
    case sweep::ObservableKind::populations:
    case sweep::ObservableKind::steady_state:
        u.push_back("p=1");
        break;
    default:
        u.push_back("I=" + fisher::information_unit(*spec.observable.theta));
    }
    u.push_back(std::string(to_string(spec.axis1.param)) + "=" + unit_of(spec.axis1.param));
    if (spec.axis2)
        u.push_back(std::string(to_string(spec.axis2->param)) + "=" + unit_of(spec.axis2->param));
    return u;
}

std::string status_field(const sweep::CellStatus& s) {
    return s.code;
}

} // namespace

std::string axis_label(ParamId id) {
    return id == ParamId::omega0 ? "w" : std::string(to_string(id));
}

std::vector<std::string> population_names(ModelId model) {
    if (model == ModelId::tls)
        return {"p1", "p2"};
    return {"p_0", "p_D0", "p_D1", "p_A0", "p_A1"};
}

std::vector<std::string> component_names(const sweep::SweepSpec& spec) {
    switch (spec.observable.kind) {
    case sweep::ObservableKind::populations:
    case sweep::ObservableKind::steady_state:
        return population_names(spec.model());
    case sweep::ObservableKind::optimal_time:
        return {"t_opt", "I_opt", "kind"};
    default:
        return {"I"};
    }
}

bool use_wide_layout(const sweep::SweepSpec& spec) {
    return spec.time_resolved() && !spec.axis2 && spec.axis1.values.size() <= kWideLimit;
}

Table to_table(const sweep::SweepResult& r) {
    const auto& spec = r.spec;
    const auto comps = component_names(spec);
    Table t;
    t.units = base_units(spec);

    auto cell_value = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t c) -> std::string {
        const double v = r.at(i, j, k, c);
        if (spec.observable.kind == sweep::ObservableKind::optimal_time && c == 2)
            return std::isfinite(v) ? std::string(fisher::to_string(sweep::decode_peak(v))) : std::string{};
        return number(v);
    };

    if (use_wide_layout(spec)) {
        t.columns.push_back("t");
        const std::string label = axis_label(spec.axis1.param);
        for (double a : spec.axis1.values)
            for (const auto& c : comps)
                t.columns.push_back(c + "_" + label + config::format_double(a));
        t.columns.push_back("status");

        std::string status;
        for (std::size_t i = 0; i < r.n1; ++i) {
            const auto& s = r.cell_status(i, 0);
            if (!s.ok())
                status += (status.empty() ? "" : ";") + label + config::format_double(spec.axis1.values[i]) + ":" +
                          status_field(s);
        }
        if (status.empty())
            status = "ok";

        for (std::size_t k = 0; k < r.nt; ++k) {
            std::vector<std::string> row{number(spec.times[k])};
            for (std::size_t i = 0; i < r.n1; ++i)
                for (std::size_t c = 0; c < r.ncomp; ++c)
                    row.push_back(cell_value(i, 0, k, c));
            row.push_back(status);
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    t.columns.push_back(std::string(to_string(spec.axis1.param)));
    if (spec.axis2)
        t.columns.push_back(std::string(to_string(spec.axis2->param)));
    if (spec.time_resolved())
        t.columns.push_back("t");
    t.columns.insert(t.columns.end(), comps.begin(), comps.end());
    t.columns.push_back("status");

    for (std::size_t i = 0; i < r.n1; ++i)
        for (std::size_t j = 0; j < r.n2; ++j)
            for (std::size_t k = 0; k < r.nt; ++k) {
                std::vector<std::string> row{number(spec.axis1.values[i])};
                if (spec.axis2)
                    row.push_back(number(spec.axis2->values[j]));
                if (spec.time_resolved())
                    row.push_back(number(spec.times[k]));
                for (std::size_t c = 0; c < r.ncomp; ++c)
                    row.push_back(cell_value(i, j, k, c));
                row.push_back(status_field(r.cell_status(i, j)));
                t.rows.push_back(std::move(row));
            }
    return t;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

void write_csv(std::ostream& out, const Table& table) {
    out << "# units:";
    for (std::size_t i = 0; i < table.units.size(); ++i)
        out << (i ? ", " : " ") << table.units[i];
    out << '\n';
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            out << (i ? "," : "") << csv_field(fields[i]);
        out << '\n';
    };
    line(table.columns);
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw NumericalError("output table is not rectangular");
        line(row);
    }
}

std::string provenance_json(const sweep::SweepResult& r, std::string_view origin) {
    nlohmann::ordered_json j;
    j["origin"] = origin;
    j["library_version"] = r.provenance.version;
    j["eigen_version"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                         std::to_string(EIGEN_MINOR_VERSION);
    j["created_utc"] = r.provenance.timestamp;
    j["deterministic"] = r.provenance.deterministic;
    j["model"] = to_string(r.spec.model());
    j["observable"] = sweep::to_string(r.spec.observable.kind);
    j["shape"] = {r.n1, r.n2, r.nt, r.ncomp};
    auto config_lines = nlohmann::ordered_json::array();
    std::istringstream config_text(config::serialize_config(r.spec));
    for (std::string line; std::getline(config_text, line);)
        config_lines.push_back(line);
    j["config"] = config_lines;
    auto failures = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < r.n1; ++i)
        for (std::size_t jj = 0; jj < r.n2; ++jj) {
            const auto& s = r.cell_status(i, jj);
            if (!s.ok())
                failures.push_back({{"i", i}, {"j", jj}, {"code", s.code}, {"message", s.message}});
        }
    j["failed_cells"] = failures;
    return j.dump(2) + "\n";
}

std::filesystem::path meta_path(const std::filesystem::path& data_path) {
    auto p = data_path;
    p.replace_extension(".meta");
    return p;
}

void write_result(const sweep::SweepResult& result, const std::filesystem::path& path, std::string_view origin) {
    {
        std::ofstream out(path, std::ios::binary);
        if (!out)
            throw ConfigError("cannot write output file '" + path.string() + "'");
        write_csv(out, to_table(result));
    }
    std::ofstream meta(meta_path(path), std::ios::binary);
    if (!meta)
        throw ConfigError("cannot write sidecar '" + meta_path(path).string() + "'");
    meta << provenance_json(result, origin);
}

} // namespace dar::output
