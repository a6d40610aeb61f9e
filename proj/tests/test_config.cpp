#include <doctest.h>

#include <cmath>
#include <random>
#include <string>

#include "dar/config.hpp"
#include "dar/errors.hpp"
#include "dar/presets.hpp"

using namespace dar;

namespace {

const char* kMinimal = R"(# six required keys
system.eps_d = -5.4
system.eps_a = -3.8

leads.mu_L = 1     # left lead
leads.mu_R = -1
leads.T_L  = 2
leads.T_R  = 1
)";

std::string error_of(const std::string& text) {
    try {
        config::parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return {};
}

bool contains(const std::string& s, const std::string& part) {
    return s.find(part) != std::string::npos;
}

} // namespace

TEST_CASE("config: minimal file takes documented defaults") {
    const auto spec = config::parse_config(kMinimal);
    REQUIRE(spec.model() == ModelId::tls);
    const auto& p = std::get<JunctionParams>(spec.base);
    CHECK(p.eps_d == -5.4);
    CHECK(p.right.mu == -1.0);
    CHECK(p.omega0 == 0.091);
    CHECK(p.gamma_hyb == 0.7);
    CHECK(spec.observable.kind == sweep::ObservableKind::steady_state);
    CHECK(spec.axis1.param == ParamId::omega0);
    CHECK(spec.axis1.values == std::vector<double>{0.091});
    CHECK_FALSE(spec.axis2);
    CHECK(spec.fisher.p_floor == 1e-12);
}

TEST_CASE("config: a full multilevel file") {
    const auto spec = config::parse_config(R"(
model.type = multilevel
model.initial = 0, 1, 0, 0, 0
system.eps_d = -5.4
system.eps_a = -3.8
system.omega0 = 0.2
leads.mu_L = 3.8
leads.mu_R = -3.8
leads.T_L = 0.1
leads.T_R = 0.1
multilevel.gamma0 = 0.25
multilevel.t_vib = 0.3
axis1.param = omega0
axis1.min = 0.01
axis1.max = 2
axis1.count = 5
axis1.spacing = log
observable.kind = steady_fisher
observable.theta = omega0
numerics.fd_step = 1e-5
)");
    REQUIRE(spec.model() == ModelId::multilevel);
    const auto& m = std::get<MultilevelParams>(spec.base);
    CHECK(m.gamma0 == 0.25);
    REQUIRE(m.t_vib);
    CHECK(*m.t_vib == 0.3);
    CHECK(spec.initial == std::vector<double>{0, 1, 0, 0, 0});
    CHECK(spec.axis1.values.size() == 5);
    CHECK(spec.axis1.values[2] == doctest::Approx(std::sqrt(0.02)));
    REQUIRE(spec.fisher.fd_step);
    CHECK(*spec.fisher.fd_step == 1e-5);
}

TEST_CASE("config: errors carry line numbers and suggestions") {
    auto e = error_of(std::string(kMinimal) + "leads.T_l = 1\n");
    CHECK(contains(e, "line 9"));
    CHECK(contains(e, "did you mean 'leads.T_L'"));

    e = error_of(std::string(kMinimal) + "observable.thet = omega0\n");
    CHECK(contains(e, "observable.theta"));

    e = error_of("system.eps_d = -5.4\nthis line has no equals sign\n");
    CHECK(contains(e, "line 2"));

    e = error_of(std::string(kMinimal) + "system.eps_a = 1\n");
    CHECK(contains(e, "duplicate"));
    CHECK(contains(e, "line 3"));

    e = error_of(std::string(kMinimal) + "system.omega0 = fast\n");
    CHECK(contains(e, "line 9"));
    CHECK(contains(e, "expects a number"));

    e = error_of("system.eps_d = -5.4\nsystem.eps_a = -3.8\nleads.mu_L = 1\nleads.mu_R = -1\nleads.T_L = 2\n");
    CHECK(contains(e, "missing required key 'leads.T_R'"));

    e = error_of(std::string(kMinimal) + "multilevel.gamma0 = 1\n");
    CHECK(contains(e, "does not apply to model tls"));

    e = error_of(std::string(kMinimal) + "axis1.min = 0.1\n");
    CHECK(contains(e, "axis1.param"));
}

TEST_CASE("config: physical invariants are validated") {
    auto text = std::string(kMinimal);
    text.replace(text.find("T_L  = 2"), 8, "T_L = -1");
    const auto e = error_of(text);
    CHECK(contains(e, "T_L must be > 0"));

    CHECK(contains(error_of(std::string(kMinimal) + "observable.kind = fisher\nobservable.theta = eps_a\n"), "time"));
    CHECK(contains(error_of(std::string(kMinimal) + "observable.kind = steady_fisher\nobservable.theta = gamma_L\n"),
                   "theta"));
}

TEST_CASE("config: missing file") {
    CHECK_THROWS_AS(config::load_config("/nonexistent/dar.cfg"), ConfigError);
}

TEST_CASE("config: nearest key") {
    CHECK(config::nearest_key("system.omega") == "system.omega0");
    CHECK(config::nearest_key("time.cnt") == "time.count");
}

TEST_CASE("format_double: shortest text that parses back exactly") {
    CHECK(config::format_double(0.091) == "0.091");
    CHECK(config::format_double(-3.8) == "-3.8");
    CHECK(config::format_double(1e-300) == "1e-300");
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> exponent(-300, 300);
    std::uniform_real_distribution<double> mantissa(-1, 1);
    for (int i = 0; i < 10000; ++i) {
        const double v = mantissa(rng) * std::pow(10.0, exponent(rng));
        CHECK(std::stod(config::format_double(v)) == v);
    }
}

TEST_CASE("config: every preset survives serialize and reload") {
    for (const auto& id : presets::preset_ids()) {
        CAPTURE(id);
        const auto spec = presets::make_preset(id).spec;
        const auto text = config::serialize_config(spec);
        const auto back = config::parse_config(text);
        CHECK(config::serialize_config(back) == text);
        CHECK(back.axis1.values == spec.axis1.values);
        CHECK(back.times == spec.times);
        CHECK(back.observable.theta == spec.observable.theta);
    }
}

TEST_CASE("config: reloaded preset reproduces the result tensor bit for bit") {
    for (const char* id : {"fig1c", "fig3d", "fig4i", "fig5b", "fig5a"}) {
        CAPTURE(id);
        const auto spec = presets::make_preset(id).spec;
        const auto back = config::parse_config(config::serialize_config(spec));
        const auto a = sweep::run_sweep(spec, 2);
        const auto b = sweep::run_sweep(back, 3);
        REQUIRE(a.values.size() == b.values.size());
        bool identical = true;
        for (std::size_t i = 0; i < a.values.size(); ++i)
            identical = identical && (a.values[i] == b.values[i] || (std::isnan(a.values[i]) && std::isnan(b.values[i])));
        CHECK(identical);
    }
}
