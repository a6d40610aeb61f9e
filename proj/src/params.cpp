// params.cpp — Parameter validation and by-name access

#include "dar/params.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "dar/errors.hpp"

namespace dar {

namespace {

constexpr std::array<std::pair<ParamId, std::string_view>, 15> kNames{{
    {ParamId::eps_d, "eps_d"},
    {ParamId::eps_a, "eps_a"},
    {ParamId::omega0, "omega0"},
    {ParamId::mu_L, "mu_L"},
    {ParamId::mu_R, "mu_R"},
    {ParamId::T_L, "T_L"},
    {ParamId::T_R, "T_R"},
    {ParamId::gamma_hyb, "gamma_hyb"},
    {ParamId::gamma_L, "gamma_L"},
    {ParamId::gamma_R, "gamma_R"},
    {ParamId::gamma_DA, "gamma_DA"},
    {ParamId::gamma_AD, "gamma_AD"},
    {ParamId::gamma0, "gamma0"},
    {ParamId::t_vib, "t_vib"},
    {ParamId::lambda, "lambda"},
}};

constexpr std::array kTlsParams{ParamId::eps_d, ParamId::eps_a, ParamId::omega0, ParamId::mu_L,
                                ParamId::mu_R,  ParamId::T_L,   ParamId::T_R,    ParamId::gamma_hyb};

constexpr std::array kMultilevelParams{ParamId::eps_d,   ParamId::eps_a,    ParamId::omega0,
                                       ParamId::mu_L,    ParamId::mu_R,     ParamId::T_L,
                                       ParamId::T_R,     ParamId::gamma_L,  ParamId::gamma_R,
                                       ParamId::gamma_DA, ParamId::gamma_AD, ParamId::gamma0,
                                       ParamId::t_vib,   ParamId::lambda};

void require_finite(double v, const char* name) {
    if (!std::isfinite(v))
        throw DomainError(std::string(name) + " must be finite");
}

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be > 0, got " + show(v));
}

void require_nonnegative(double v, const char* name) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be >= 0, got " + show(v));
}

} // namespace

std::string_view to_string(ModelId id) {
    return id == ModelId::tls ? "tls" : "multilevel";
}

ModelId parse_model_id(std::string_view name) {
    if (name == "tls")
        return ModelId::tls;
    if (name == "multilevel")
        return ModelId::multilevel;
    throw DomainError("unknown model '" + std::string(name) + "' (valid: tls, multilevel)");
}

void JunctionParams::validate() const {
    require_finite(eps_d, "eps_d");
    require_finite(eps_a, "eps_a");
    require_finite(left.mu, "mu_L");
    require_finite(right.mu, "mu_R");
    require_positive(omega0, "omega0");
    require_positive(gamma_hyb, "gamma_hyb");
    require_positive(left.temperature, "T_L");
    require_positive(right.temperature, "T_R");
}

void MultilevelParams::validate() const {
    require_finite(eps_d, "eps_d");
    require_finite(eps_a, "eps_a");
    require_finite(left.mu, "mu_L");
    require_finite(right.mu, "mu_R");
    require_finite(lambda, "lambda");
    require_positive(omega0, "omega0");
    require_positive(left.temperature, "T_L");
    require_positive(right.temperature, "T_R");
    require_positive(bath_temperature(), "t_vib");
    require_nonnegative(gamma_L, "gamma_L");
    require_nonnegative(gamma_R, "gamma_R");
    require_nonnegative(gamma_DA, "gamma_DA");
    require_nonnegative(gamma_AD, "gamma_AD");
    require_nonnegative(gamma0, "gamma0");
    if (gamma_L + gamma_R + gamma_DA + gamma_AD + gamma0 == 0.0)
        throw DomainError("at least one rate prefactor must be > 0");
}

ModelId model_of(const ModelParams& params) {
    return std::holds_alternative<JunctionParams>(params) ? ModelId::tls : ModelId::multilevel;
}

std::size_t state_count(ModelId id) {
    return id == ModelId::tls ? 2 : 5;
}

void validate(const ModelParams& params) {
    std::visit([](const auto& p) { p.validate(); }, params);
}

std::string_view to_string(ParamId id) {
    for (const auto& [pid, name] : kNames)
        if (pid == id)
            return name;
    return "?";
}

std::optional<ParamId> find_param(std::string_view name) {
    for (const auto& [pid, n] : kNames)
        if (n == name)
            return pid;
    return std::nullopt;
}

ParamId parse_param(std::string_view name) {
    if (auto id = find_param(name))
        return *id;
    std::string valid;
    for (const auto& [pid, n] : kNames)
        valid += (valid.empty() ? "" : ", ") + std::string(n);
    throw DomainError("unknown parameter '" + std::string(name) + "' (valid: " + valid + ")");
}

std::span<const ParamId> params_of(ModelId model) {
    if (model == ModelId::tls)
        return kTlsParams;
    return kMultilevelParams;
}

bool has_param(ModelId model, ParamId id) {
    const auto ids = params_of(model);
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

void require_param(ModelId model, ParamId id) {
    if (has_param(model, id))
        return;
    std::string valid;
    for (auto p : params_of(model))
        valid += (valid.empty() ? "" : ", ") + std::string(to_string(p));
    throw DomainError("parameter '" + std::string(to_string(id)) + "' is not defined for model " +
                      std::string(to_string(model)) + " (valid: " + valid + ")");
}

bool is_positive_param(ParamId id) {
    switch (id) {
    case ParamId::omega0:
    case ParamId::T_L:
    case ParamId::T_R:
    case ParamId::gamma_hyb:
    case ParamId::t_vib:
        return true;
    default:
        return false;
    }
}

double get_param(const ModelParams& params, ParamId id) {
    require_param(model_of(params), id);
    if (const auto* j = std::get_if<JunctionParams>(&params)) {
        switch (id) {
        case ParamId::eps_d: return j->eps_d;
        case ParamId::eps_a: return j->eps_a;
        case ParamId::omega0: return j->omega0;
        case ParamId::mu_L: return j->left.mu;
        case ParamId::mu_R: return j->right.mu;
        case ParamId::T_L: return j->left.temperature;
        case ParamId::T_R: return j->right.temperature;
        case ParamId::gamma_hyb: return j->gamma_hyb;
        default: break;
        }
    } else {
        const auto& m = std::get<MultilevelParams>(params);
        switch (id) {
        case ParamId::eps_d: return m.eps_d;
        case ParamId::eps_a: return m.eps_a;
        case ParamId::omega0: return m.omega0;
        case ParamId::mu_L: return m.left.mu;
        case ParamId::mu_R: return m.right.mu;
        case ParamId::T_L: return m.left.temperature;
        case ParamId::T_R: return m.right.temperature;
        case ParamId::gamma_L: return m.gamma_L;
        case ParamId::gamma_R: return m.gamma_R;
        case ParamId::gamma_DA: return m.gamma_DA;
        case ParamId::gamma_AD: return m.gamma_AD;
        case ParamId::gamma0: return m.gamma0;
        case ParamId::t_vib: return m.bath_temperature();
        case ParamId::lambda: return m.lambda;
        default: break;
        }
    }
    throw DomainError("unhandled parameter " + std::string(to_string(id)));
}

void set_param(ModelParams& params, ParamId id, double value) {
    require_param(model_of(params), id);
    if (auto* j = std::get_if<JunctionParams>(&params)) {
        switch (id) {
        case ParamId::eps_d: j->eps_d = value; return;
        case ParamId::eps_a: j->eps_a = value; return;
        case ParamId::omega0: j->omega0 = value; return;
        case ParamId::mu_L: j->left.mu = value; return;
        case ParamId::mu_R: j->right.mu = value; return;
        case ParamId::T_L: j->left.temperature = value; return;
        case ParamId::T_R: j->right.temperature = value; return;
        case ParamId::gamma_hyb: j->gamma_hyb = value; return;
        default: break;
        }
    } else {
        auto& m = std::get<MultilevelParams>(params);
        switch (id) {
        case ParamId::eps_d: m.eps_d = value; return;
        case ParamId::eps_a: m.eps_a = value; return;
        case ParamId::omega0: m.omega0 = value; return;
        case ParamId::mu_L: m.left.mu = value; return;
        case ParamId::mu_R: m.right.mu = value; return;
        case ParamId::T_L: m.left.temperature = value; return;
        case ParamId::T_R: m.right.temperature = value; return;
        case ParamId::gamma_L: m.gamma_L = value; return;
        case ParamId::gamma_R: m.gamma_R = value; return;
        case ParamId::gamma_DA: m.gamma_DA = value; return;
        case ParamId::gamma_AD: m.gamma_AD = value; return;
        case ParamId::gamma0: m.gamma0 = value; return;
        case ParamId::t_vib: m.t_vib = value; return;
        case ParamId::lambda: m.lambda = value; return;
        default: break;
        }
    }
    throw DomainError("unhandled parameter " + std::string(to_string(id)));
}

std::vector<double> default_initial(ModelId model) {
    if (model == ModelId::tls)
        return {1.0, 0.0};
    return {1.0, 0.0, 0.0, 0.0, 0.0};
}

void validate_distribution(std::span<const double> p, std::size_t expected_size) {
    if (p.size() != expected_size)
        throw DomainError("initial distribution has " + std::to_string(p.size()) +
                          " entries, expected " + std::to_string(expected_size));
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0 && v <= 1.0))
            throw DomainError("initial distribution entries must lie in [0, 1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw DomainError("initial distribution must sum to 1, got " + show(sum));
}

} // namespace dar
