#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dar/errors.hpp"
#include "dar/multilevel.hpp"
#include "support/ode_oracle.hpp"
#include "support/random_params.hpp"

using namespace dar;
using namespace dar::multilevel;

namespace {

MultilevelParams fig5_params(double temperature) {
    MultilevelParams p;
    p.eps_d = -5.4;
    p.eps_a = -3.8;
    p.omega0 = 0.091;
    p.gamma_L = p.gamma_R = 1.0;
    p.gamma_DA = p.gamma_AD = 1.0;
    p.gamma0 = 0.5;
    p.left = {3.8, temperature};
    p.right = {-3.8, temperature};
    return p;
}

// Equal leads and bath with eps_a = eps_d - omega0: the only detailed-balanced choice.
MultilevelParams equilibrium_params() {
    MultilevelParams p;
    p.eps_d = 0.1;
    p.omega0 = 0.2;
    p.eps_a = p.eps_d - p.omega0;
    p.gamma_L = 0.8;
    p.gamma_R = 1.3;
    p.gamma_DA = p.gamma_AD = 0.9;
    p.gamma0 = 0.4;
    p.left = p.right = {0.05, 0.3};
    p.t_vib = 0.3;
    return p;
}

} // namespace

TEST_CASE("franck_condon: identity displacement, unit displacement, bad level") {
    CHECK(franck_condon(0, 0.0, 0.1) == 1.0);
    CHECK(franck_condon(1, 0.0, 0.1) == 0.0);
    CHECK(std::abs(franck_condon(0, 0.3, 0.3) - 0.3678794411714423216) < 1e-15);
    CHECK(std::abs(franck_condon(1, 0.3, 0.3) - 0.3678794411714423216) < 1e-15);
    CHECK_THROWS_AS(franck_condon(2, 0.1, 0.1), DomainError);
    CHECK_THROWS_AS(franck_condon(-1, 0.1, 0.1), DomainError);

    MultilevelParams p;
    CHECK(franck_condon_weight(0, p) == 1.0);
    CHECK(franck_condon_weight(1, p) == 1.0);
    p.lambda = p.omega0;
    CHECK(franck_condon_weight(1, p) == doctest::Approx(std::exp(-1.0)));
}

TEST_CASE("multilevel_rates: caption parameters against 50-digit composition") {
    const auto r = multilevel_rates(fig5_params(0.1));
    CHECK(r.gL_plus[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.gL_plus[1] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.gL_minus[0] == doctest::Approx(1.1089390193101260566e-40).epsilon(1e-12));
    CHECK(r.gL_minus[1] == doctest::Approx(2.7549621938320740112e-40).epsilon(1e-12));
    CHECK(r.gR_plus[0] == 0.5);
    CHECK(r.gR_minus[0] == 0.5);
    CHECK(r.gR_plus[1] == 0.0);
    CHECK(r.gR_minus[1] == 0.0);
    CHECK(std::abs(r.k_DA[0] - 1.6737080233631041816) < 1e-14);
    CHECK(std::abs(r.k_DA[1] - 1.6737080233631041816) < 1e-14);
    CHECK(std::abs(r.k_AD[0] - 0.67370802336310418161) < 1e-14);
    CHECK(std::abs(r.k_AD[1] - 0.67370802336310418161) < 1e-14);
    CHECK(std::abs(r.up - 0.33685401168155209081) < 1e-14);
    CHECK(std::abs(r.down - 0.83685401168155209081) < 1e-14);
}

TEST_CASE("multilevel_rates: empty phonon bath and detailed balance of the bath") {
    auto p = fig5_params(0.1);
    p.t_vib = 1e-4;
    const auto r = multilevel_rates(p);
    CHECK(r.up == doctest::Approx(0.0));
    CHECK(r.down == doctest::Approx(p.gamma0));
    CHECK(r.k_AD[0] == doctest::Approx(0.0));
    CHECK(r.k_AD[1] == doctest::Approx(0.0));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const auto q = multilevel_rates(testing::random_multilevel(rng));
        CHECK(q.down > q.up);
    }
    p.t_vib.reset();
    p.gamma_L = p.gamma_R = p.gamma_DA = p.gamma_AD = p.gamma0 = 0.0;
    CHECK_THROWS_AS(multilevel_rates(p), DomainError);
}

TEST_CASE("multilevel_generator: verbatim structure, zero rates, column sums") {
    CHECK(multilevel_generator(RateSet5{}).isZero());

    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const auto l = multilevel_generator(multilevel_rates(testing::random_multilevel(rng)));
        const double scale = l.cwiseAbs().maxCoeff();
        CHECK(l.colwise().sum().cwiseAbs().maxCoeff() <= 1e-14 * scale);
        for (int r = 0; r < 5; ++r)
            for (int c = 0; c < 5; ++c)
                if (r != c)
                    CHECK(l(r, c) >= 0.0);
    }

    const auto r = multilevel_rates(fig5_params(0.1));
    const auto l = multilevel_generator(r);
    CHECK(l(donor0, acceptor0) == r.k_AD[0]);
    CHECK(l(acceptor0, donor0) == r.k_DA[0]);
    CHECK(l(donor1, acceptor1) == r.k_AD[1]);
    CHECK(l(acceptor1, donor1) == r.k_DA[1]);
    CHECK(l(donor0, donor1) == r.down);
    CHECK(l(donor1, donor0) == r.up);
    CHECK(l(donor0, acceptor1) == 0.0);
    CHECK(l(donor1, acceptor0) == 0.0);
}

TEST_CASE("multilevel_generator: spectrum has one zero mode and a vibrational fast mode") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        const auto l = multilevel_generator(multilevel_rates(testing::random_multilevel(rng)));
        const Eigen::VectorXcd ev = l.eigenvalues();
        const double norm = l.norm();
        int zeros = 0;
        for (Eigen::Index k = 0; k < ev.size(); ++k) {
            if (std::abs(ev(k)) < 1e-10 * norm)
                ++zeros;
            else
                CHECK(ev(k).real() < 0.0);
        }
        CHECK(zeros == 1);
    }

    auto p = fig5_params(0.1);
    p.gamma0 = 1e4;
    const Eigen::VectorXcd ev = multilevel_generator(multilevel_rates(p)).eigenvalues();
    double fastest = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k)
        fastest = std::min(fastest, ev(k).real());
    // Two vibrational relaxation channels (donor and acceptor) at gamma_up + gamma_down.
    const auto r = multilevel_rates(p);
    CHECK(-fastest == doctest::Approx(r.up + r.down).epsilon(1e-2));
}

TEST_CASE("multilevel_steady_state: kernel, spectral route and ODE limit") {
    const auto gen = multilevel_generator(multilevel_rates(fig5_params(0.1)));
    const auto p = multilevel_steady_state(gen);
    CHECK((gen * p).cwiseAbs().maxCoeff() <= 1e-12 * gen.norm());
    CHECK(p.sum() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.minCoeff() >= 0.0);

    const auto q = steady_state_from_spectrum(gen);
    CHECK((p - q).cwiseAbs().maxCoeff() < 1e-10);

    PopulationVector5 rho0 = PopulationVector5::Zero();
    rho0(empty) = 1.0;
    const auto late = testing::integrate_linear(gen, rho0, 200.0, {1e-13, 1e-11});
    CHECK((late - p).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("multilevel_steady_state: detailed balance gives zero elementary fluxes") {
    const auto gen = multilevel_generator(multilevel_rates(equilibrium_params()));
    const auto p = multilevel_steady_state(gen);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(std::abs(gen(i, j) * p(j) - gen(j, i) * p(i)) < 1e-10);
}

TEST_CASE("multilevel_steady_state: disconnected graph names the blocks") {
    auto p = fig5_params(0.1);
    p.gamma_L = p.gamma_R = 0.0;
    const auto gen = multilevel_generator(multilevel_rates(p));
    CHECK_THROWS_AS(multilevel_steady_state(gen), DegenerateSteadyStateError);
    try {
        multilevel_steady_state(gen);
    } catch (const DegenerateSteadyStateError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("|0>") != std::string::npos);
        CHECK(msg.find("|D_0>") != std::string::npos);
    }
    const auto classes = closed_classes(gen);
    CHECK(classes.size() == 2);
}

TEST_CASE("propagate_multilevel: identity, relaxation and negative time") {
    const auto gen = multilevel_generator(multilevel_rates(fig5_params(0.1)));
    PopulationVector5 rho0;
    rho0 << 0.2, 0.3, 0.1, 0.25, 0.15;
    CHECK(propagate_multilevel(rho0, 0.0, gen) == rho0);
    const auto late = propagate_multilevel(rho0, 500.0, gen);
    CHECK((late - multilevel_steady_state(gen)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK_THROWS_AS(propagate_multilevel(rho0, -0.1, gen), DomainError);
}

TEST_CASE("propagate_multilevel: matrix exponential vs adaptive ODE on random instances") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 100; ++i) {
        const auto gen = multilevel_generator(multilevel_rates(testing::random_multilevel(rng)));
        PopulationVector5 rho0;
        for (int k = 0; k < 5; ++k)
            rho0(k) = testing::uniform(rng, 0.0, 1.0);
        rho0 /= rho0.sum();
        const double t = testing::uniform(rng, 0.0, 10.0);
        const auto a = propagate_multilevel(rho0, t, gen);
        const auto b = testing::integrate_linear(gen, rho0, t, {1e-13, 1e-11});
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(a.sum() - 1.0) < 1e-10);
        CHECK(a.minCoeff() >= 0.0);
        CHECK(a.maxCoeff() <= 1.0);
    }
}
