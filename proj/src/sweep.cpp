// sweep.cpp — Grid sweeps, cell evaluation and extremum location

#include "dar/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <limits>
#include <thread>

#include "dar/errors.hpp"

#ifndef DAR_VERSION
#define DAR_VERSION "0.0.0"
#endif

namespace dar::sweep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_grid(const std::vector<double>& g, const std::string& field) {
    if (g.empty())
        throw ConfigError(field + ": grid is empty");
    for (double v : g)
        if (!std::isfinite(v))
            throw ConfigError(field + ": grid values must be finite");
    if (g.size() < 2)
        return;
    const bool increasing = g[1] > g[0];
    for (std::size_t i = 1; i < g.size(); ++i)
        if (increasing ? !(g[i] > g[i - 1]) : !(g[i] < g[i - 1]))
            throw ConfigError(field + ": grid must be strictly monotone (index " + std::to_string(i) + ")");
}

std::string now_utc() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string library_version() {
    return DAR_VERSION;
}

std::string_view to_string(ObservableKind k) {
    switch (k) {
    case ObservableKind::populations: return "populations";
    case ObservableKind::fisher: return "fisher";
    case ObservableKind::steady_state: return "steady_state";
    case ObservableKind::steady_fisher: return "steady_fisher";
    case ObservableKind::optimal_time: return "optimal_time";
    }
    return "?";
}

ObservableKind parse_observable(std::string_view name) {
    for (auto k : {ObservableKind::populations, ObservableKind::fisher, ObservableKind::steady_state,
                   ObservableKind::steady_fisher, ObservableKind::optimal_time})
        if (to_string(k) == name)
            return k;
    throw ConfigError("unknown observable '" + std::string(name) +
                      "' (valid: populations, fisher, steady_state, steady_fisher, optimal_time)");
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0)
        throw ConfigError("grid count must be >= 1");
    if (count == 1)
        return {lo};
    std::vector<double> g(count);
    const double n = static_cast<double>(count - 1);
    for (std::size_t i = 0; i < count; ++i)
        g[i] = lo + (hi - lo) * static_cast<double>(i) / n;
    g.back() = hi;
    return g;
}

std::vector<double> logspace(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > 0.0))
        throw ConfigError("log-spaced grid needs positive endpoints");
    auto g = linspace(std::log(lo), std::log(hi), count);
    for (auto& v : g)
        v = std::exp(v);
    g.front() = lo;
    g.back() = hi;
    return g;
}

bool SweepSpec::time_resolved() const {
    return observable.kind == ObservableKind::populations || observable.kind == ObservableKind::fisher;
}

std::size_t SweepSpec::components() const {
    switch (observable.kind) {
    case ObservableKind::populations:
    case ObservableKind::steady_state:
        return state_count(model());
    case ObservableKind::optimal_time:
        return 3;
    default:
        return 1;
    }
}

std::size_t scalar_component(const SweepSpec& spec) {
    switch (spec.observable.kind) {
    case ObservableKind::fisher:
    case ObservableKind::steady_fisher:
        return 0;
    case ObservableKind::optimal_time:
        return 1;
    default:
        throw ConfigError("observable '" + std::string(to_string(spec.observable.kind)) + "' is not scalar");
    }
}

void SweepSpec::validate() const {
    try {
        dar::validate(base);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("base parameters: ") + e.what());
    }
    const ModelId m = model();
    if (!initial.empty()) {
        try {
            validate_distribution(initial, state_count(m));
        } catch (const DomainError& e) {
            throw ConfigError(std::string("model.initial: ") + e.what());
        }
    }
    auto check_axis = [&](const Axis& axis, const std::string& field) {
        if (!has_param(m, axis.param))
            throw ConfigError(field + ".param: '" + std::string(to_string(axis.param)) +
                              "' is not a parameter of model " + std::string(to_string(m)));
        check_grid(axis.values, field + ".values");
    };
    check_axis(axis1, "axis1");
    if (axis2) {
        check_axis(*axis2, "axis2");
        if (axis2->param == axis1.param)
            throw ConfigError("axis2.param: must differ from axis1.param");
    }

    const auto kind = observable.kind;
    const bool needs_theta = kind == ObservableKind::fisher || kind == ObservableKind::steady_fisher ||
                             kind == ObservableKind::optimal_time;
    if (needs_theta) {
        if (!observable.theta)
            throw ConfigError("observable.theta: required for observable '" + std::string(to_string(kind)) + "'");
        if (!has_param(m, *observable.theta))
            throw ConfigError("observable.theta: '" + std::string(to_string(*observable.theta)) +
                              "' is not a parameter of model " + std::string(to_string(m)));
    }
    if (observable.theta && fisher.method == fisher::Method::analytic_chain && m != ModelId::tls)
        throw ConfigError("numerics.method: analytic_chain is only available for the tls model");

    if (time_resolved() || kind == ObservableKind::optimal_time) {
        if (times.empty())
            throw ConfigError("time: a time grid is required for observable '" + std::string(to_string(kind)) + "'");
        try {
            fisher::validate_time_grid(times);
        } catch (const DomainError& e) {
            throw ConfigError(std::string("time: ") + e.what());
        }
    }
    if (axis2) {
        const bool scalar = kind == ObservableKind::steady_fisher || kind == ObservableKind::optimal_time ||
                            (kind == ObservableKind::fisher && times.size() == 1);
        if (!scalar)
            throw ConfigError("observable.kind: two-axis sweeps need a scalar observable "
                              "(fisher at one time, steady_fisher or optimal_time)");
    }
    if (!(fisher.p_floor >= 0.0))
        throw ConfigError("numerics.p_floor: must be >= 0");
    if (fisher.fd_step && !(*fisher.fd_step > 0.0))
        throw ConfigError("numerics.fd_step: must be > 0");
    if (!(optimal.time_tol > 0.0))
        throw ConfigError("numerics.tol: must be > 0");
}

ModelParams cell_params(const SweepSpec& spec, std::size_t i, std::size_t j) {
    ModelParams p = spec.base;
    auto apply = [&](const Axis& axis, std::size_t idx) {
        double v = axis.values[idx];
        if (axis.param == ParamId::omega0)
            v = std::max(v, kOmegaFloor);
        set_param(p, axis.param, v);
    };
    apply(spec.axis1, i);
    if (spec.axis2)
        apply(*spec.axis2, j);
    return p;
}

double encode_peak(fisher::PeakKind k) {
    return static_cast<double>(static_cast<int>(k));
}

fisher::PeakKind decode_peak(double code) {
    return static_cast<fisher::PeakKind>(static_cast<int>(code));
}

std::vector<double> evaluate_observable(const SweepSpec& spec, const ModelParams& params) {
    const ModelId m = model_of(params);
    const auto p0 = spec.initial.empty() ? default_initial(m) : spec.initial;
    switch (spec.observable.kind) {
    case ObservableKind::populations: {
        const fisher::Evolution evo(params, p0);
        std::vector<double> out;
        out.reserve(spec.times.size() * evo.states());
        for (double t : spec.times) {
            const auto p = evo.populations(t);
            out.insert(out.end(), p.begin(), p.end());
        }
        return out;
    }
    case ObservableKind::fisher:
        return fisher::fisher_series(params, *spec.observable.theta, spec.times, p0, spec.fisher).values;
    case ObservableKind::steady_state:
        return fisher::Evolution(params, p0).steady_state();
    case ObservableKind::steady_fisher:
        return {fisher::fisher_steady_state(params, *spec.observable.theta, spec.fisher)};
    case ObservableKind::optimal_time: {
        const auto best =
            fisher::optimal_time(params, *spec.observable.theta, spec.times, p0, spec.fisher, spec.optimal);
        return {best.time, best.value, encode_peak(best.kind)};
    }
    }
    return {};
}

SweepResult run_sweep(const SweepSpec& spec, unsigned threads) {
    spec.validate();

    SweepResult result;
    result.spec = spec;
    result.n1 = spec.axis1.values.size();
    result.n2 = spec.axis2 ? spec.axis2->values.size() : 1;
    result.nt = spec.time_resolved() ? spec.times.size() : 1;
    result.ncomp = spec.components();
    const std::size_t cells = result.n1 * result.n2;
    const std::size_t per_cell = result.nt * result.ncomp;
    result.values.assign(cells * per_cell, kNaN);
    result.status.assign(cells, CellStatus{});
    result.provenance = {library_version(), now_utc(), true};

    auto evaluate_cell = [&](std::size_t cell) {
        const std::size_t i = cell / result.n2;
        const std::size_t j = cell % result.n2;
        CellStatus& st = result.status[cell];
        try {
            const auto v = evaluate_observable(spec, cell_params(spec, i, j));
            for (double x : v)
                if (!std::isfinite(x))
                    throw NumericalError("non-finite value in cell");
            std::copy(v.begin(), v.end(), result.values.begin() + static_cast<std::ptrdiff_t>(cell * per_cell));
        } catch (const SmallProbabilityError& e) {
            st = {"small_probability", e.what()};
        } catch (const DegenerateGeneratorError& e) {
            st = {"degenerate", e.what()};
        } catch (const DegenerateSteadyStateError& e) {
            st = {"degenerate", e.what()};
        } catch (const DomainError& e) {
            st = {"domain", e.what()};
        } catch (const NumericalError& e) {
            st = {"numerical", e.what()};
        } catch (const std::exception& e) {
            st = {"error", e.what()};
        }
        if (!st.ok())
            std::fill_n(result.values.begin() + static_cast<std::ptrdiff_t>(cell * per_cell), per_cell, kNaN);
    };

    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cells));
    if (threads <= 1) {
        for (std::size_t c = 0; c < cells; ++c)
            evaluate_cell(c);
        return result;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t c = next++; c < cells; c = next++)
                evaluate_cell(c);
        });
    pool.clear();
    return result;
}

Extremum locate_extremum(const SweepResult& result, ParamId axis) {
    const auto& spec = result.spec;
    const std::size_t comp = scalar_component(spec);
    if (result.nt != 1)
        throw ConfigError("locate_extremum needs a scalar observable (one value per cell)");
    const bool along1 = spec.axis1.param == axis;
    const bool along2 = spec.axis2 && spec.axis2->param == axis;
    if (!along1 && !along2)
        throw ConfigError("locate_extremum: '" + std::string(to_string(axis)) + "' is not a sweep axis");

    bool found = false;
    Extremum best;
    for (std::size_t i = 0; i < result.n1; ++i)
        for (std::size_t j = 0; j < result.n2; ++j) {
            if (!result.cell_status(i, j).ok())
                continue;
            const double v = result.at(i, j, 0, comp);
            if (!found || v > best.value) {
                found = true;
                best.i = i;
                best.j = j;
                best.value = v;
            }
        }
    if (!found)
        throw ConfigError("locate_extremum: every cell of the sweep failed");

    best.axis1_value = spec.axis1.values[best.i];
    if (spec.axis2)
        best.axis2_value = spec.axis2->values[best.j];

    const auto& grid = along1 ? spec.axis1.values : spec.axis2->values;
    const std::size_t idx = along1 ? best.i : best.j;
    best.refined_coordinate = grid[idx];
    if (idx == 0 || idx + 1 >= grid.size())
        return best;
    auto value_at = [&](std::size_t k, double& out) {
        const std::size_t i = along1 ? k : best.i;
        const std::size_t j = along1 ? best.j : k;
        if (!result.cell_status(i, j).ok())
            return false;
        out = result.at(i, j, 0, comp);
        return true;
    };
    double f0 = 0, f1 = best.value, f2 = 0;
    if (!value_at(idx - 1, f0) || !value_at(idx + 1, f2))
        return best;
    const double x0 = grid[idx - 1], x1 = grid[idx], x2 = grid[idx + 1];
    const double num = (x1 - x0) * (x1 - x0) * (f1 - f2) - (x1 - x2) * (x1 - x2) * (f1 - f0);
    const double den = (x1 - x0) * (f1 - f2) - (x1 - x2) * (f1 - f0);
    if (den != 0.0) {
        const double x = x1 - 0.5 * num / den;
        if (std::isfinite(x) && x >= std::min(x0, x2) && x <= std::max(x0, x2))
            best.refined_coordinate = x;
    }
    return best;
}

} // namespace dar::sweep
