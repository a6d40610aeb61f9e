// cli.cpp — Subcommand parsing and dispatch

#include "dar/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "dar/config.hpp"
#include "dar/errors.hpp"
#include "dar/fisher.hpp"
#include "dar/multilevel.hpp"
#include "dar/output.hpp"
#include "dar/presets.hpp"
#include "dar/sweep.hpp"
#include "dar/tls.hpp"

namespace dar::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PhysicsFlags {
    std::string model{"tls"};
    std::map<ParamId, std::optional<double>> values;
    std::vector<double> initial;

    void add(CLI::App* app, bool with_model = true) {
        if (with_model)
            app->add_option("--model", model, "tls or multilevel")->check(CLI::IsMember({"tls", "multilevel"}));
        const std::pair<const char*, ParamId> flags[] = {
            {"--eps-d", ParamId::eps_d},       {"--eps-a", ParamId::eps_a},       {"--omega0", ParamId::omega0},
            {"--mu-l", ParamId::mu_L},         {"--mu-r", ParamId::mu_R},         {"--t-l", ParamId::T_L},
            {"--t-r", ParamId::T_R},           {"--gamma", ParamId::gamma_hyb},   {"--gamma-l", ParamId::gamma_L},
            {"--gamma-r", ParamId::gamma_R},   {"--gamma-da", ParamId::gamma_DA}, {"--gamma-ad", ParamId::gamma_AD},
            {"--gamma0", ParamId::gamma0},     {"--t-vib", ParamId::t_vib},       {"--lambda", ParamId::lambda},
        };
        for (const auto& [flag, id] : flags)
            app->add_option(flag, values[id], std::string(to_string(id)) + " [eV]");
        if (with_model)
            app->add_option("--initial", initial, "initial populations (model default if omitted)")->delimiter(',');
    }

    ModelParams build(ModelId id, bool strict) const {
        ModelParams p = id == ModelId::tls ? ModelParams{JunctionParams{}} : ModelParams{MultilevelParams{}};
        for (const auto& [param, v] : values) {
            if (!v)
                continue;
            if (!has_param(id, param)) {
                if (strict)
                    throw DomainError("parameter " + std::string(to_string(param)) + " does not apply to model " +
                                      std::string(to_string(id)));
                continue;
            }
            set_param(p, param, *v);
        }
        validate(p);
        return p;
    }

    ModelParams build() const { return build(parse_model_id(model), true); }
};

struct NumericFlags {
    std::optional<double> tol;
    std::optional<double> fd_step;
    std::optional<double> p_floor;
    std::string method{"central_fd"};

    void add(CLI::App* app, bool with_method = true) {
        app->add_option("--tol", tol, "time tolerance of the optimal-time search");
        app->add_option("--fd-step", fd_step, "fixed finite-difference step");
        app->add_option("--p-floor", p_floor, "smallest probability entering I");
        if (with_method)
            app->add_option("--method", method, "central_fd or analytic_chain")
                ->check(CLI::IsMember({"central_fd", "analytic_chain"}));
    }

    void apply(fisher::FisherOptions& f, fisher::OptimalTimeOptions& o) const {
        if (fd_step)
            f.fd_step = *fd_step;
        if (p_floor)
            f.p_floor = *p_floor;
        if (tol)
            o.time_tol = *tol;
        f.method = method == "analytic_chain" ? fisher::Method::analytic_chain : fisher::Method::central_fd;
    }
};

struct TimeFlags {
    double t_min{0.0};
    std::optional<double> t_max;
    std::size_t points{501};

    void add(CLI::App* app) {
        app->add_option("--t-min", t_min, "first time [hbar/eV]");
        app->add_option("--t-max", t_max, "last time [hbar/eV] (250 for tls, 20 for multilevel)");
        app->add_option("--points", points, "number of time points")->check(CLI::PositiveNumber);
    }

    std::vector<double> grid(ModelId m) const {
        const double hi = t_max.value_or(m == ModelId::tls ? 250.0 : 20.0);
        auto g = sweep::linspace(t_min, hi, points);
        fisher::validate_time_grid(g);
        return g;
    }
};

// Routes data either to a file or to the output stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                throw ConfigError("cannot write output file '" + path + "'");
        }
        stream_ = path.empty() ? &fallback : &file_;
    }
    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

std::vector<double> initial_state(const PhysicsFlags& flags, ModelId m) {
    if (flags.initial.empty())
        return default_initial(m);
    validate_distribution(flags.initial, state_count(m));
    return flags.initial;
}

std::vector<std::string> state_labels(ModelId m) {
    return output::population_names(m);
}

std::string num(double v) {
    return config::format_double(v);
}

int cmd_rates(const PhysicsFlags& flags, const std::string& out_path, std::ostream& out) {
    const auto tls = std::get<JunctionParams>(flags.build(ModelId::tls, false));
    const auto ml = std::get<MultilevelParams>(flags.build(ModelId::multilevel, false));
    output::Table t;
    t.units = {"value=eV"};
    t.columns = {"model", "rate", "value"};
    const auto r2 = tls::tls_rates(tls);
    const std::pair<const char*, double> tls_rows[] = {
        {"a_da_plus", r2.a_da_plus}, {"a_ad_plus", r2.a_ad_plus},   {"a_da_minus", r2.a_da_minus},
        {"a_ad_minus", r2.a_ad_minus}, {"forward", r2.forward()},   {"backward", r2.backward()},
        {"decay_rate", tls::decay_rate(r2, tls.gamma_hyb)},
    };
    for (const auto& [name, v] : tls_rows)
        t.rows.push_back({"tls", name, num(v)});
    const auto r5 = multilevel::multilevel_rates(ml);
    for (int n = 0; n < 2; ++n) {
        const auto sn = std::to_string(n);
        const auto idx = static_cast<std::size_t>(n);
        t.rows.push_back({"multilevel", "gamma_L" + sn + "_plus", num(r5.gL_plus[idx])});
        t.rows.push_back({"multilevel", "gamma_L" + sn + "_minus", num(r5.gL_minus[idx])});
        t.rows.push_back({"multilevel", "gamma_R" + sn + "_plus", num(r5.gR_plus[idx])});
        t.rows.push_back({"multilevel", "gamma_R" + sn + "_minus", num(r5.gR_minus[idx])});
        t.rows.push_back({"multilevel", "k_DA" + sn, num(r5.k_DA[idx])});
        t.rows.push_back({"multilevel", "k_AD" + sn, num(r5.k_AD[idx])});
    }
    t.rows.push_back({"multilevel", "gamma_up", num(r5.up)});
    t.rows.push_back({"multilevel", "gamma_down", num(r5.down)});
    Sink sink(out_path, out);
    output::write_csv(sink.stream(), t);
    return 0;
}

int cmd_evolve(const PhysicsFlags& flags, const TimeFlags& times, const std::string& out_path, std::ostream& out) {
    const auto params = flags.build();
    const ModelId m = model_of(params);
    const fisher::Evolution evo(params, initial_state(flags, m));
    output::Table t;
    t.units = {"t=hbar/eV", "p=1"};
    t.columns = {"t"};
    for (const auto& l : state_labels(m))
        t.columns.push_back(l);
    for (double time : times.grid(m)) {
        std::vector<std::string> row{num(time)};
        for (double p : evo.populations(time))
            row.push_back(num(p));
        t.rows.push_back(std::move(row));
    }
    Sink sink(out_path, out);
    output::write_csv(sink.stream(), t);
    return 0;
}

int cmd_fisher(const PhysicsFlags& flags, const TimeFlags& times, const NumericFlags& numerics,
               const std::string& theta_name, const std::string& out_path, std::ostream& out, std::ostream& err) {
    const auto params = flags.build();
    const ModelId m = model_of(params);
    const ParamId theta = parse_param(theta_name);
    require_param(m, theta);
    fisher::FisherOptions fopts;
    fisher::OptimalTimeOptions oopts;
    numerics.apply(fopts, oopts);
    const auto p0 = initial_state(flags, m);
    const auto grid = times.grid(m);
    const auto series = fisher::fisher_series(params, theta, grid, p0, fopts);

    output::Table t;
    t.units = {"t=hbar/eV", "I=" + series.unit};
    t.columns = {"t", "I_" + std::string(to_string(theta))};
    for (std::size_t k = 0; k < grid.size(); ++k)
        t.rows.push_back({num(grid[k]), num(series.values[k])});
    Sink sink(out_path, out);
    output::write_csv(sink.stream(), t);

    const auto best = fisher::optimal_time(params, theta, grid, p0, fopts, oopts);
    err << "optimal time: " << fisher::to_string(best.kind) << ", t* = " << show(best.time)
        << " hbar/eV, I* = " << show(best.value) << " " << series.unit << "\n";
    return 0;
}

int cmd_steady(const PhysicsFlags& flags, const NumericFlags& numerics, const std::string& theta_name,
               const std::string& out_path, std::ostream& out) {
    const auto params = flags.build();
    const ModelId m = model_of(params);
    const fisher::Evolution evo(params, default_initial(m));
    output::Table t;
    t.units = {"p=1"};
    t.columns = {"quantity", "value"};
    const auto labels = state_labels(m);
    const auto ss = evo.steady_state();
    for (std::size_t i = 0; i < ss.size(); ++i)
        t.rows.push_back({labels[i], num(ss[i])});
    if (!theta_name.empty()) {
        const ParamId theta = parse_param(theta_name);
        require_param(m, theta);
        fisher::FisherOptions fopts;
        fisher::OptimalTimeOptions oopts;
        numerics.apply(fopts, oopts);
        t.units.push_back("I=" + fisher::information_unit(theta));
        t.rows.push_back({"I_" + std::string(to_string(theta)), num(fisher::fisher_steady_state(params, theta, fopts))});
    }
    Sink sink(out_path, out);
    output::write_csv(sink.stream(), t);
    return 0;
}

int emit_sweep(sweep::SweepSpec spec, const NumericFlags& numerics, unsigned threads, const std::string& origin,
               const std::string& out_path, std::ostream& out, std::ostream& err) {
    if (numerics.fd_step)
        spec.fisher.fd_step = *numerics.fd_step;
    if (numerics.p_floor)
        spec.fisher.p_floor = *numerics.p_floor;
    if (numerics.tol)
        spec.optimal.time_tol = *numerics.tol;
    const auto result = sweep::run_sweep(spec, threads);
    const auto failed = static_cast<std::size_t>(
        std::count_if(result.status.begin(), result.status.end(), [](const auto& s) { return !s.ok(); }));
    if (out_path.empty()) {
        output::write_csv(out, output::to_table(result));
    } else {
        output::write_result(result, out_path, origin);
        err << origin << ": wrote " << out_path << " and " << output::meta_path(out_path).string() << "\n";
    }
    err << origin << ": " << result.status.size() << " cells, " << failed << " failed\n";
    for (std::size_t c = 0; c < result.status.size(); ++c)
        if (!result.status[c].ok())
            err << "  cell " << c << ": " << result.status[c].code << ": " << result.status[c].message << "\n";
    return 0;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Donor-acceptor rectifier: populations, Fisher information and parameter sweeps", "dar"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sweep::library_version());

    std::string out_path;
    unsigned threads = 0;
    PhysicsFlags physics;
    TimeFlags times;
    NumericFlags numerics;
    std::string theta;
    std::string config_path;
    std::string figure_id;
    bool list = false;

    auto* rates = app.add_subcommand("rates", "print the transition rates of both models");
    physics.add(rates, false);
    rates->add_option("--out", out_path, "output file");

    auto* evolve = app.add_subcommand("evolve", "population time trace");
    physics.add(evolve);
    times.add(evolve);
    evolve->add_option("--out", out_path, "output file");

    auto* fisher_cmd = app.add_subcommand("fisher", "Fisher information time series for one parameter");
    physics.add(fisher_cmd);
    times.add(fisher_cmd);
    numerics.add(fisher_cmd);
    fisher_cmd->add_option("--theta", theta, "estimated parameter")->required();
    fisher_cmd->add_option("--out", out_path, "output file");

    auto* steady = app.add_subcommand("steady", "steady-state populations and Fisher information");
    physics.add(steady);
    numerics.add(steady);
    steady->add_option("--theta", theta, "estimated parameter");
    steady->add_option("--out", out_path, "output file");

    auto* sweep_cmd = app.add_subcommand("sweep", "run a sweep described by a configuration file");
    sweep_cmd->add_option("config", config_path, "configuration file")->required();
    sweep_cmd->add_option("--out", out_path, "output CSV (a .meta sidecar is written next to it)");
    sweep_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
    numerics.add(sweep_cmd, false);

    auto* figure = app.add_subcommand("figure", "run a figure preset");
    figure->add_option("id", figure_id, "preset id");
    figure->add_flag("--list", list, "list preset ids");
    figure->add_option("--out", out_path, "output CSV (a .meta sidecar is written next to it)");
    figure->add_option("--threads", threads, "worker threads (0 = all cores)");
    numerics.add(figure, false);

    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* a) {
        return !args.empty() && a->get_name() == args.front();
    });
    if (!args.empty() && !args.front().empty() && args.front()[0] != '-' && !known)
        throw UsageError("unknown subcommand '" + args.front() + "' (valid: rates, evolve, fisher, steady, sweep, figure)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << sweep::library_version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run 'dar --help' for usage\n";
        return 2;
    }

    if (rates->parsed())
        return cmd_rates(physics, out_path, out);
    if (evolve->parsed())
        return cmd_evolve(physics, times, out_path, out);
    if (fisher_cmd->parsed())
        return cmd_fisher(physics, times, numerics, theta, out_path, out, err);
    if (steady->parsed())
        return cmd_steady(physics, numerics, theta, out_path, out);
    if (sweep_cmd->parsed())
        return emit_sweep(config::load_config(config_path), numerics, threads, config_path, out_path, out, err);
    if (list) {
        for (const auto& id : presets::preset_ids())
            out << id << ": " << presets::make_preset(id).description << "\n";
        return 0;
    }
    if (figure_id.empty())
        throw UsageError("figure: a preset id or --list is required");
    const auto& ids = presets::preset_ids();
    if (std::find(ids.begin(), ids.end(), figure_id) == ids.end()) {
        try {
            presets::make_preset(figure_id);
        } catch (const ConfigError& e) {
            throw UsageError(e.what());
        }
    }
    return emit_sweep(presets::make_preset(figure_id).spec, numerics, threads, figure_id, out_path, out, err);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace dar::cli
