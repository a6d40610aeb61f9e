// presets.cpp — Scenario definitions

#include "dar/presets.hpp"

#include <algorithm>

#include "dar/errors.hpp"

namespace dar::presets {

namespace {

using sweep::Axis;
using sweep::ObservableKind;
using sweep::SweepSpec;
using sweep::linspace;

const std::vector<double> kModes{0.091, 0.139, 0.196};
constexpr double kHighBias = 3.8;

// Donor/acceptor levels and lead temperatures of the time-trace figures.
JunctionParams junction(double mu, double t_left = 2.0, double t_right = 1.0, double omega0 = 0.091) {
    JunctionParams p;
    p.eps_d = -5.4;
    p.eps_a = -3.8;
    p.omega0 = omega0;
    p.gamma_hyb = 0.7;
    p.left = {mu, t_left};
    p.right = {-mu, t_right};
    return p;
}

MultilevelParams vibronic(double temperature) {
    MultilevelParams p;
    p.left = {kHighBias, temperature};
    p.right = {-kHighBias, temperature};
    return p;
}

std::vector<double> trace_times() {
    return linspace(0.0, 250.0, 2501);
}

std::vector<double> contour_times() {
    return linspace(0.0, 250.0, 251);
}

SweepSpec trace(const JunctionParams& p, ObservableKind kind, std::optional<ParamId> theta) {
    SweepSpec s;
    s.base = p;
    s.axis1 = {ParamId::omega0, kModes};
    s.observable = {kind, theta};
    s.times = trace_times();
    return s;
}

SweepSpec contour(const JunctionParams& p, Axis axis) {
    SweepSpec s;
    s.base = p;
    s.axis1 = std::move(axis);
    s.observable = {ObservableKind::fisher, ParamId::omega0};
    s.times = contour_times();
    return s;
}

// mu_R grid shared by the resonance panels, step 0.02 eV.
std::vector<double> mu_r_grid() {
    return linspace(-4.6, -2.6, 101);
}

ScenarioPreset build(std::string_view id) {
    const std::string sid(id);
    const double fig3_t[] = {1.0, 0.5, 0.1, 0.05};
    if (id == "fig1b")
        return {sid, "TLS populations for three vibrational modes; omega0 = 0.091 replaces the caption's 0.019",
                trace(junction(1.0), ObservableKind::populations, std::nullopt)};
    if (id == "fig1c")
        return {sid, "I(eps_a)(t), mu_L = -mu_R = 1", trace(junction(1.0), ObservableKind::fisher, ParamId::eps_a)};
    if (id == "fig1d")
        return {sid, "I(eps_a)(t), low bias mu_L = -mu_R = 0.1",
                trace(junction(0.1), ObservableKind::fisher, ParamId::eps_a)};
    if (id == "fig2a")
        return {sid, "I(eps_a)(t), high bias mu_L = -mu_R = 3",
                trace(junction(3.0), ObservableKind::fisher, ParamId::eps_a)};
    if (id == "fig2b")
        return {sid, "I(eps_d)(t), mid bias mu_L = -mu_R = 1",
                trace(junction(1.0), ObservableKind::fisher, ParamId::eps_d)};
    if (id == "fig2c")
        return {sid, "I(eps_d)(t), low bias mu_L = -mu_R = 0.1",
                trace(junction(0.1), ObservableKind::fisher, ParamId::eps_d)};
    if (id == "fig2d")
        return {sid, "I(eps_d)(t), high bias mu_L = -mu_R = 3",
                trace(junction(3.0), ObservableKind::fisher, ParamId::eps_d)};
    if (id.size() == 5 && id.substr(0, 4) == "fig3" && id[4] >= 'a' && id[4] <= 'd') {
        const double t = fig3_t[id[4] - 'a'];
        return {sid, "I(omega0)(t), mu_L = -mu_R = 3.8, T_L = T_R = " + show(t),
                trace(junction(kHighBias, t, t), ObservableKind::fisher, ParamId::omega0)};
    }
    if (id == "fig4a" || id == "fig4b") {
        const double t = id == "fig4a" ? 0.05 : 0.1;
        return {sid, "I(omega0)(t) over omega0 in [0, 0.4] (0 clamped to 1e-6), high bias, T = " + show(t),
                contour(junction(kHighBias, t, t), {ParamId::omega0, linspace(0.0, 0.4, 41)})};
    }
    if (id.size() == 5 && id.substr(0, 4) == "fig4" && id[4] >= 'c' && id[4] <= 'h') {
        const int k = id[4] - 'c';
        const double t = k < 3 ? 0.05 : 0.1;
        const double w = kModes[static_cast<std::size_t>(k % 3)];
        return {sid,
                "I(omega0)(t) over mu_R in [-4.6, -2.6], mu_L = 3.8, omega0 = " + show(w) + ", T = " + show(t),
                contour(junction(kHighBias, t, t, w), {ParamId::mu_R, mu_r_grid()})};
    }
    if (id == "fig4i") {
        SweepSpec s;
        s.base = junction(kHighBias, 0.1, 0.1);
        s.axis1 = {ParamId::T_L, linspace(0.05, 1.0, 20)};
        s.axis2 = Axis{ParamId::T_R, linspace(0.05, 1.0, 20)};
        s.observable = {ObservableKind::steady_fisher, ParamId::omega0};
        return {sid, "steady-state I(omega0) over T_L x T_R, high bias, omega0 = 0.091", s};
    }
    if (id == "fig4j")
        return {sid, "I(omega0)(t) over T_L in [0.05, 1] at T_R = 0.1, high bias, omega0 = 0.091",
                contour(junction(kHighBias, 0.1, 0.1), {ParamId::T_L, linspace(0.05, 1.0, 20)})};
    if (id == "fig5a" || id == "fig5c") {
        const double t = id == "fig5a" ? 0.1 : 0.05;
        SweepSpec s;
        s.base = vibronic(t);
        s.axis1 = {ParamId::omega0, {0.091}};
        s.observable = {ObservableKind::populations, std::nullopt};
        s.times = linspace(0.0, 20.0, 401);
        return {sid, "five-state populations from the empty junction, high bias, T = T_vib = " + show(t), s};
    }
    if (id == "fig5b" || id == "fig5d") {
        const double t = id == "fig5b" ? 0.1 : 0.05;
        SweepSpec s;
        s.base = vibronic(t);
        s.axis1 = {ParamId::omega0, linspace(0.01, 2.0, 200)};
        s.observable = {ObservableKind::steady_fisher, ParamId::omega0};
        return {sid, "five-state steady-state I(omega0) over omega0 in [0.01, 2], high bias, T = " + show(t), s};
    }
    std::string best;
    std::size_t best_score = 0;
    for (const auto& cand : preset_ids()) {
        std::size_t score = 0;
        while (score < cand.size() && score < id.size() && cand[score] == id[score])
            ++score;
        if (score > best_score) {
            best_score = score;
            best = cand;
        }
    }
    throw ConfigError("unknown figure preset '" + sid + "'" + (best.empty() ? "" : " (did you mean '" + best + "'?)") +
                      "; run 'figure --list'");
}

} // namespace

const std::vector<std::string>& preset_ids() {
    static const std::vector<std::string> ids{
        "fig1b", "fig1c", "fig1d", "fig2a", "fig2b", "fig2c", "fig2d", "fig3a", "fig3b", "fig3c", "fig3d",
        "fig4a", "fig4b", "fig4c", "fig4d", "fig4e", "fig4f", "fig4g", "fig4h", "fig4i", "fig4j",
        "fig5a", "fig5b", "fig5c", "fig5d"};
    return ids;
}

ScenarioPreset make_preset(std::string_view id) {
    auto p = build(id);
    p.spec.validate();
    return p;
}

} // namespace dar::presets
