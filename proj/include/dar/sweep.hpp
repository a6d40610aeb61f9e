// sweep.hpp — One- and two-axis parameter sweeps over either model
//
// A sweep substitutes grid values into a base parameter set and evaluates one
// observable per cell. Cells are independent; results are stored positionally,
// so the tensor does not depend on how many threads evaluated it.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dar/fisher.hpp"
#include "dar/params.hpp"

namespace dar::sweep {

enum class ObservableKind {
    populations,   // p_i(t) on the time grid
    fisher,        // I(theta)(t) on the time grid
    steady_state,  // steady-state populations
    steady_fisher, // I(theta) on the steady state
    optimal_time,  // (t*, I*, kind) of the I(theta)(t) series
};

std::string_view to_string(ObservableKind k);
ObservableKind parse_observable(std::string_view name);

struct Observable {
    ObservableKind kind{ObservableKind::steady_fisher};
    std::optional<ParamId> theta{};
};

struct Axis {
    ParamId param{ParamId::omega0};
    std::vector<double> values;
};

std::vector<double> linspace(double lo, double hi, std::size_t count);
std::vector<double> logspace(double lo, double hi, std::size_t count);

struct SweepSpec {
    ModelParams base{JunctionParams{}};
    std::vector<double> initial{}; // empty selects the model default
    Axis axis1{};
    std::optional<Axis> axis2{};
    Observable observable{};
    std::vector<double> times{}; // required for time-resolved observables
    fisher::FisherOptions fisher{};
    fisher::OptimalTimeOptions optimal{};

    ModelId model() const { return model_of(base); }
    bool time_resolved() const;
    // Number of values per time point (populations: one per state).
    std::size_t components() const;
    // Throws ConfigError naming the failing field.
    void validate() const;
};

// Component index carrying the scalar value of a cell (I for Fisher-type observables).
std::size_t scalar_component(const SweepSpec& spec);

struct CellStatus {
    std::string code{"ok"}; // ok | small_probability | domain | degenerate | numerical
    std::string message{};
    bool ok() const { return code == "ok"; }
};

struct Provenance {
    std::string version;
    std::string timestamp;
    bool deterministic{true};
};

struct SweepResult {
    SweepSpec spec;
    std::size_t n1{0}, n2{1}, nt{1}, ncomp{1};
    std::vector<double> values;     // ((i * n2 + j) * nt + k) * ncomp + c; NaN in failed cells
    std::vector<CellStatus> status; // i * n2 + j
    Provenance provenance;

    double at(std::size_t i, std::size_t j, std::size_t k, std::size_t c) const {
        return values[((i * n2 + j) * nt + k) * ncomp + c];
    }
    const CellStatus& cell_status(std::size_t i, std::size_t j) const { return status[i * n2 + j]; }
};

// Parameters of cell (i, j): axis values substituted, omega0 clamped to kOmegaFloor.
ModelParams cell_params(const SweepSpec& spec, std::size_t i, std::size_t j);

// Observable for one parameter set, nt * ncomp values in (time, component) order.
std::vector<double> evaluate_observable(const SweepSpec& spec, const ModelParams& params);

// Numeric encoding of fisher::PeakKind stored in optimal_time cells.
double encode_peak(fisher::PeakKind k);
fisher::PeakKind decode_peak(double code);

// threads == 0 uses the hardware concurrency.
SweepResult run_sweep(const SweepSpec& spec, unsigned threads = 0);

struct Extremum {
    std::size_t i{0};
    std::size_t j{0};
    double axis1_value{0.0};
    std::optional<double> axis2_value{};
    double refined_coordinate{0.0}; // along the requested axis, parabolic sub-grid estimate
    double value{0.0};
};

// Maximal finite cell of a scalar sweep; ties go to the lowest index.
Extremum locate_extremum(const SweepResult& result, ParamId axis);

std::string library_version();

} // namespace dar::sweep
