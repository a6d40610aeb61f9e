// fisher.hpp — Classical Fisher information of the population distribution
//
//     I(theta) = sum_i (d p_i / d theta)^2 / p_i
//
// evaluated along the time evolution of either model or on its steady state. The
// initial distribution is held fixed (independent of theta).

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "dar/multilevel.hpp"
#include "dar/params.hpp"
#include "dar/tls.hpp"

namespace dar::fisher {

enum class Method { central_fd, analytic_chain };

std::string_view to_string(Method m);

struct FisherOptions {
    Method method{Method::central_fd};
    std::optional<double> fd_step{}; // absolute step; default cbrt(eps) * max(|theta|, 1)
    double p_floor{1e-12};
};

// Population dynamics of one fixed parameter set. Rates and generator are built once.
class Evolution {
public:
    Evolution(const ModelParams& params, std::vector<double> p0);

    ModelId model() const { return model_; }
    std::size_t states() const { return p0_.size(); }

    std::vector<double> populations(double t) const;
    std::vector<double> steady_state() const;
    // Slowest nonzero relaxation rate of the generator.
    double relaxation_rate() const;

private:
    ModelId model_;
    std::vector<double> p0_;
    tls::RateSet2 tls_rates_{};
    double gamma_hyb_{0.0};
    multilevel::Generator generator_{};
};

// Finite-difference step actually used for theta at its current value.
double fd_step(ParamId theta, double value, const FisherOptions& opts = {});

// sum dp_i^2 / p_i. States below the floor contribute nothing when their derivative is
// exactly zero and raise SmallProbabilityError otherwise.
double information(std::span<const double> p, std::span<const double> dp, double p_floor);

double fisher_at_time(const ModelParams& params, ParamId theta, double t, std::span<const double> p0,
                      const FisherOptions& opts = {});

double fisher_steady_state(const ModelParams& params, ParamId theta, const FisherOptions& opts = {});

// Closed-form derivative route for the two-level model.
double fisher_at_time_analytic(const JunctionParams& params, ParamId theta, double t,
                               const tls::PopulationVector2& p0, double p_floor = 1e-12);
double fisher_steady_state_analytic(const JunctionParams& params, ParamId theta,
                                    double p_floor = 1e-12);

struct FisherSeries {
    ModelId model{ModelId::tls};
    ParamId theta{ParamId::eps_a};
    std::vector<double> times;
    std::vector<double> values;
    double diff_step{0.0};
    Method method{Method::central_fd};
    std::string unit; // e.g. "eV^-2"
};

// Unit of I for a given theta.
std::string information_unit(ParamId theta);

void validate_time_grid(std::span<const double> times);

FisherSeries fisher_series(const ModelParams& params, ParamId theta, std::span<const double> times,
                           std::span<const double> p0, const FisherOptions& opts = {});

enum class PeakKind {
    interior,   // maximum before the end of the grid, refined
    saturating, // maximum at the end and the series has flattened out
    boundary,   // maximum at an end of the grid but still changing
};

std::string_view to_string(PeakKind k);

struct OptimalTime {
    PeakKind kind{PeakKind::boundary};
    double time{0.0};
    double value{0.0};
    std::size_t grid_index{0};
};

struct OptimalTimeOptions {
    double time_tol{1e-4};
    // Relative change of I over the last tenth of the time span below which an
    // end-of-grid maximum counts as saturated.
    double saturation_slope{1e-3};
    // Values within this relative distance of the grid maximum are treated as ties;
    // the latest tied point is taken as the argmax so plateau noise reads as saturation.
    double plateau_tol{1e-6};
};

// Grid argmax, refined by golden section on `evaluate` when the peak is interior.
OptimalTime find_optimal_time(const FisherSeries& series, const std::function<double(double)>& evaluate,
                              const OptimalTimeOptions& opts = {});

// Grid-only classification (no refinement).
OptimalTime find_optimal_time(const FisherSeries& series, const OptimalTimeOptions& opts = {});

// Series and refinement evaluator built from the same model.
OptimalTime optimal_time(const ModelParams& params, ParamId theta, std::span<const double> times,
                         std::span<const double> p0, const FisherOptions& fopts = {},
                         const OptimalTimeOptions& opts = {});

} // namespace dar::fisher
