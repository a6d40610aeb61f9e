// config.cpp — Configuration parsing and serialisation

#include "dar/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "dar/errors.hpp"

namespace dar::config {

namespace {

struct Entry {
    std::string value;
    int line;
};

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j)
        row[j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

class Reader {
public:
    explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::optional<std::string> text(const std::string& key) {
        auto it = entries_.find(key);
        if (it == entries_.end())
            return std::nullopt;
        used_.push_back(key);
        return it->second.value;
    }

    std::optional<double> number(const std::string& key) {
        auto s = text(key);
        if (!s)
            return std::nullopt;
        return parse_number(*s, key);
    }

    double required_number(const std::string& key) {
        if (auto v = number(key))
            return *v;
        throw ConfigError("missing required key '" + key + "'");
    }

    std::optional<std::vector<double>> list(const std::string& key) {
        auto s = text(key);
        if (!s)
            return std::nullopt;
        std::vector<double> out;
        std::string_view rest = *s;
        while (true) {
            const auto comma = rest.find(',');
            out.push_back(parse_number(trim(rest.substr(0, comma)), key));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        return out;
    }

    int line_of(const std::string& key) const { return entries_.at(key).line; }

    // Keys present in the file but never consumed.
    std::vector<std::string> unused() const {
        std::vector<std::string> out;
        for (const auto& [k, _] : entries_)
            if (std::find(used_.begin(), used_.end(), k) == used_.end())
                out.push_back(k);
        return out;
    }

private:
    double parse_number(std::string_view s, const std::string& key) const {
        s = trim(s);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw ConfigError("line " + std::to_string(line_of(key)) + ": '" + key + "' expects a number, got '" +
                              std::string(s) + "'");
        return v;
    }

    std::map<std::string, Entry> entries_;
    std::vector<std::string> used_;
};

constexpr const char* kTlsOnly[] = {"system.gamma_hyb"};
constexpr const char* kMultilevelOnly[] = {"multilevel.gamma_L",  "multilevel.gamma_R", "multilevel.gamma_DA",
                                           "multilevel.gamma_AD", "multilevel.gamma0",  "multilevel.lambda",
                                           "multilevel.t_vib"};

std::vector<double> read_grid(Reader& r, const std::string& section) {
    const std::string values_key = section + ".values";
    const bool has_values = r.has(values_key);
    const bool has_range = r.has(section + ".min") || r.has(section + ".max") || r.has(section + ".count");
    if (has_values && has_range)
        throw ConfigError(section + ": give either '" + values_key + "' or min/max/count, not both");
    if (has_values)
        return *r.list(values_key);
    if (!has_range)
        throw ConfigError("missing required key '" + values_key + "' (or " + section + ".min/max/count)");
    const double lo = r.required_number(section + ".min");
    const double hi = r.required_number(section + ".max");
    const double count = r.required_number(section + ".count");
    if (!(count >= 1.0) || count != std::floor(count))
        throw ConfigError(section + ".count: must be a positive integer");
    const std::string spacing = r.text(section + ".spacing").value_or("linear");
    if (spacing == "linear")
        return sweep::linspace(lo, hi, static_cast<std::size_t>(count));
    if (spacing == "log")
        return sweep::logspace(lo, hi, static_cast<std::size_t>(count));
    throw ConfigError(section + ".spacing: expected 'linear' or 'log', got '" + spacing + "'");
}

sweep::Axis read_axis(Reader& r, const std::string& section) {
    const auto name = r.text(section + ".param");
    if (!name)
        throw ConfigError("missing required key '" + section + ".param'");
    const auto id = find_param(*name);
    if (!id)
        throw ConfigError(section + ".param: unknown parameter '" + *name + "'");
    return {*id, read_grid(r, section)};
}

} // namespace

const std::vector<std::string>& key_registry() {
    static const std::vector<std::string> keys{
        "model.type",          "model.initial",
        "system.eps_d",        "system.eps_a",         "system.omega0",       "system.gamma_hyb",
        "leads.mu_L",          "leads.mu_R",           "leads.T_L",           "leads.T_R",
        "multilevel.gamma_L",  "multilevel.gamma_R",   "multilevel.gamma_DA", "multilevel.gamma_AD",
        "multilevel.gamma0",   "multilevel.lambda",    "multilevel.t_vib",
        "axis1.param",         "axis1.values",         "axis1.min",           "axis1.max",
        "axis1.count",         "axis1.spacing",
        "axis2.param",         "axis2.values",         "axis2.min",           "axis2.max",
        "axis2.count",         "axis2.spacing",
        "observable.kind",     "observable.theta",
        "time.values",         "time.min",             "time.max",            "time.count",
        "numerics.method",     "numerics.fd_step",     "numerics.p_floor",    "numerics.tol",
        "numerics.saturation_slope", "numerics.plateau_tol",
    };
    return keys;
}

std::string nearest_key(std::string_view key) {
    const auto& keys = key_registry();
    std::string best;
    std::size_t best_d = std::string::npos;
    for (const auto& k : keys) {
        const auto d = edit_distance(key, k);
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return best;
}

sweep::SweepSpec parse_config(std::string_view text) {
    std::map<std::string, Entry> entries;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    const auto& keys = key_registry();
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'section.key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.find('.') == std::string::npos || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'section.key = value'");
        if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "' (did you mean '" +
                              nearest_key(key) + "'?)");
        if (entries.count(key))
            throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "' (first on line " +
                              std::to_string(entries[key].line) + ")");
        entries[key] = {value, line_no};
    }

    Reader r(std::move(entries));
    const ModelId model = parse_model_id(r.text("model.type").value_or("tls"));
    for (const char* k : model == ModelId::tls ? std::vector<const char*>(std::begin(kMultilevelOnly), std::end(kMultilevelOnly))
                                               : std::vector<const char*>(std::begin(kTlsOnly), std::end(kTlsOnly)))
        if (r.has(k))
            throw ConfigError("line " + std::to_string(r.line_of(k)) + ": key '" + k +
                              "' does not apply to model " + std::string(to_string(model)));

    sweep::SweepSpec spec;
    const double eps_d = r.required_number("system.eps_d");
    const double eps_a = r.required_number("system.eps_a");
    const Reservoir left{r.required_number("leads.mu_L"), r.required_number("leads.T_L")};
    const Reservoir right{r.required_number("leads.mu_R"), r.required_number("leads.T_R")};
    if (model == ModelId::tls) {
        JunctionParams p;
        p.eps_d = eps_d;
        p.eps_a = eps_a;
        p.left = left;
        p.right = right;
        p.omega0 = r.number("system.omega0").value_or(p.omega0);
        p.gamma_hyb = r.number("system.gamma_hyb").value_or(p.gamma_hyb);
        spec.base = p;
    } else {
        MultilevelParams p;
        p.eps_d = eps_d;
        p.eps_a = eps_a;
        p.left = left;
        p.right = right;
        p.omega0 = r.number("system.omega0").value_or(p.omega0);
        p.gamma_L = r.number("multilevel.gamma_L").value_or(p.gamma_L);
        p.gamma_R = r.number("multilevel.gamma_R").value_or(p.gamma_R);
        p.gamma_DA = r.number("multilevel.gamma_DA").value_or(p.gamma_DA);
        p.gamma_AD = r.number("multilevel.gamma_AD").value_or(p.gamma_AD);
        p.gamma0 = r.number("multilevel.gamma0").value_or(p.gamma0);
        p.lambda = r.number("multilevel.lambda").value_or(p.lambda);
        p.t_vib = r.number("multilevel.t_vib");
        spec.base = p;
    }
    try {
        validate(spec.base);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid parameters: ") + e.what());
    }
    if (auto init = r.list("model.initial"))
        spec.initial = *init;

    auto mentions = [&](const std::string& section) {
        for (const char* k : {".param", ".values", ".min", ".max", ".count", ".spacing"})
            if (r.has(section + k))
                return true;
        return false;
    };
    if (mentions("axis1"))
        spec.axis1 = read_axis(r, "axis1");
    else
        spec.axis1 = {ParamId::omega0, {get_param(spec.base, ParamId::omega0)}};
    if (mentions("axis2"))
        spec.axis2 = read_axis(r, "axis2");

    spec.observable.kind = sweep::parse_observable(r.text("observable.kind").value_or("steady_state"));
    if (auto theta = r.text("observable.theta")) {
        const auto id = find_param(*theta);
        if (!id)
            throw ConfigError("observable.theta: unknown parameter '" + *theta + "'");
        spec.observable.theta = *id;
    }

    if (r.has("time.values") || r.has("time.min") || r.has("time.max") || r.has("time.count"))
        spec.times = read_grid(r, "time");

    if (auto m = r.text("numerics.method")) {
        if (*m == "central_fd")
            spec.fisher.method = fisher::Method::central_fd;
        else if (*m == "analytic_chain")
            spec.fisher.method = fisher::Method::analytic_chain;
        else
            throw ConfigError("numerics.method: expected central_fd or analytic_chain, got '" + *m + "'");
    }
    spec.fisher.fd_step = r.number("numerics.fd_step");
    spec.fisher.p_floor = r.number("numerics.p_floor").value_or(spec.fisher.p_floor);
    spec.optimal.time_tol = r.number("numerics.tol").value_or(spec.optimal.time_tol);
    spec.optimal.saturation_slope = r.number("numerics.saturation_slope").value_or(spec.optimal.saturation_slope);
    spec.optimal.plateau_tol = r.number("numerics.plateau_tol").value_or(spec.optimal.plateau_tol);

    if (const auto left_over = r.unused(); !left_over.empty())
        throw ConfigError("line " + std::to_string(r.line_of(left_over.front())) + ": key '" + left_over.front() +
                          "' is not used by this configuration");
    spec.validate();
    return spec;
}

sweep::SweepSpec load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string format_list(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i)
        out += (i ? ", " : "") + format_double(values[i]);
    return out;
}

std::string serialize_config(const sweep::SweepSpec& spec) {
    std::ostringstream out;
    auto kv = [&](const std::string& k, const std::string& v) { out << k << " = " << v << '\n'; };
    auto num = [&](const std::string& k, double v) { kv(k, format_double(v)); };
    // Uniform grids are written as min/max/count when that reproduces them exactly.
    auto grid = [&](const std::string& section, const std::vector<double>& v) {
        if (v.size() > 2 && sweep::linspace(v.front(), v.back(), v.size()) == v) {
            num(section + ".min", v.front());
            num(section + ".max", v.back());
            kv(section + ".count", std::to_string(v.size()));
        } else {
            kv(section + ".values", format_list(v));
        }
    };

    const ModelId model = spec.model();
    kv("model.type", std::string(to_string(model)));
    if (!spec.initial.empty())
        kv("model.initial", format_list(spec.initial));
    num("system.eps_d", get_param(spec.base, ParamId::eps_d));
    num("system.eps_a", get_param(spec.base, ParamId::eps_a));
    num("system.omega0", get_param(spec.base, ParamId::omega0));
    num("leads.mu_L", get_param(spec.base, ParamId::mu_L));
    num("leads.mu_R", get_param(spec.base, ParamId::mu_R));
    num("leads.T_L", get_param(spec.base, ParamId::T_L));
    num("leads.T_R", get_param(spec.base, ParamId::T_R));
    if (model == ModelId::tls) {
        num("system.gamma_hyb", get_param(spec.base, ParamId::gamma_hyb));
    } else {
        const auto& m = std::get<MultilevelParams>(spec.base);
        num("multilevel.gamma_L", m.gamma_L);
        num("multilevel.gamma_R", m.gamma_R);
        num("multilevel.gamma_DA", m.gamma_DA);
        num("multilevel.gamma_AD", m.gamma_AD);
        num("multilevel.gamma0", m.gamma0);
        num("multilevel.lambda", m.lambda);
        if (m.t_vib)
            num("multilevel.t_vib", *m.t_vib);
    }
    kv("axis1.param", std::string(to_string(spec.axis1.param)));
    grid("axis1", spec.axis1.values);
    if (spec.axis2) {
        kv("axis2.param", std::string(to_string(spec.axis2->param)));
        grid("axis2", spec.axis2->values);
    }
    kv("observable.kind", std::string(to_string(spec.observable.kind)));
    if (spec.observable.theta)
        kv("observable.theta", std::string(to_string(*spec.observable.theta)));
    if (!spec.times.empty())
        grid("time", spec.times);
    kv("numerics.method", std::string(fisher::to_string(spec.fisher.method)));
    if (spec.fisher.fd_step)
        num("numerics.fd_step", *spec.fisher.fd_step);
    num("numerics.p_floor", spec.fisher.p_floor);
    num("numerics.tol", spec.optimal.time_tol);
    num("numerics.saturation_slope", spec.optimal.saturation_slope);
    num("numerics.plateau_tol", spec.optimal.plateau_tol);
    return out.str();
}

} // namespace dar::config
