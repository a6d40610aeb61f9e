// params.hpp — Physical parameter sets for both rectifier models and by-name access

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dar/distributions.hpp"

namespace dar {

enum class ModelId { tls, multilevel };

std::string_view to_string(ModelId id);
ModelId parse_model_id(std::string_view name);

// Two-level (spin-fermion mapped) junction. Defaults are the anthracene-PMDA
// values with the C-C-C bending mode.
struct JunctionParams {
    double eps_d{-5.4};
    double eps_a{-3.8};
    double omega0{0.091};
    double gamma_hyb{0.7}; // overall rate prefactor
    Reservoir left{1.0, 2.0};
    Reservoir right{-1.0, 1.0};

    void validate() const;
};

// Five-state vibronic junction.
struct MultilevelParams {
    double eps_d{-5.4};
    double eps_a{-3.8};
    double omega0{0.091};
    double gamma_L{1.0};
    double gamma_R{1.0};
    double gamma_DA{1.0};
    double gamma_AD{1.0};
    double gamma0{0.5};
    double lambda{0.0};            // polaron displacement; 0 selects F_n = 1
    std::optional<double> t_vib{}; // phonon bath temperature; unset follows left.temperature
    Reservoir left{3.8, 0.1};
    Reservoir right{-3.8, 0.1};

    double bath_temperature() const { return t_vib.value_or(left.temperature); }
    void validate() const;
};

using ModelParams = std::variant<JunctionParams, MultilevelParams>;

ModelId model_of(const ModelParams& params);
std::size_t state_count(ModelId id);
void validate(const ModelParams& params);

// Parameters addressable by name (Fisher theta, sweep axes, config keys).
enum class ParamId {
    eps_d,
    eps_a,
    omega0,
    mu_L,
    mu_R,
    T_L,
    T_R,
    gamma_hyb,
    gamma_L,
    gamma_R,
    gamma_DA,
    gamma_AD,
    gamma0,
    t_vib,
    lambda,
};

std::string_view to_string(ParamId id);
std::optional<ParamId> find_param(std::string_view name);
// Throws DomainError naming the unknown token.
ParamId parse_param(std::string_view name);

// Parameters defined for a model, in registry order.
std::span<const ParamId> params_of(ModelId model);
bool has_param(ModelId model, ParamId id);
// Throws DomainError naming the parameter and the valid set when id is not in the model.
void require_param(ModelId model, ParamId id);

// Parameters that must stay strictly positive.
bool is_positive_param(ParamId id);

double get_param(const ModelParams& params, ParamId id);
void set_param(ModelParams& params, ParamId id, double value);

// Initial population vector for a model; validated as a distribution.
std::vector<double> default_initial(ModelId model);
void validate_distribution(std::span<const double> p, std::size_t expected_size);

} // namespace dar
