// multilevel.cpp — Five-state rectifier rates, generator, steady state and evolution

#include "dar/multilevel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "dar/errors.hpp"

namespace dar::multilevel {

namespace {

// Components of linear-algebra output this far below zero are clamped.
constexpr double kSteadyClamp = 1e-13;
constexpr double kPropagateClamp = 1e-10;

PopulationVector5 clamp_distribution(PopulationVector5 p, double tolerance, const char* what) {
    bool clamped = false;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < -tolerance || p(i) > 1.0 + tolerance || !std::isfinite(p(i)))
            throw NumericalError(std::string(what) + ": population of " +
                                 std::string(state_name(static_cast<std::size_t>(i))) + " is " +
                                 std::to_string(p(i)));
        if (p(i) < 0.0) {
            p(i) = 0.0;
            clamped = true;
        } else if (p(i) > 1.0) {
            p(i) = 1.0;
            clamped = true;
        }
    }
    if (clamped)
        p /= p.sum();
    return p;
}

} // namespace

std::string_view state_name(std::size_t index) {
    static constexpr std::array<std::string_view, kStates> names{"|0>", "|D_0>", "|D_1>", "|A_0>",
                                                                 "|A_1>"};
    return index < kStates ? names[index] : "?";
}

double franck_condon(int n, double lambda, double omega0) {
    if (n != 0 && n != 1)
        throw DomainError("franck_condon: level must be 0 or 1, got " + std::to_string(n));
    if (!(omega0 > 0.0))
        throw DomainError("franck_condon: omega0 must be > 0");
    const double g2 = (lambda / omega0) * (lambda / omega0);
    const double vacuum = std::exp(-g2);
    return n == 0 ? vacuum : g2 * vacuum;
}

double franck_condon_weight(int n, const MultilevelParams& params) {
    if (params.lambda == 0.0)
        return 1.0;
    return franck_condon(n, params.lambda, params.omega0);
}

RateSet5 multilevel_rates(const MultilevelParams& params) {
    params.validate();
    const double n_b = bose(params.omega0, params.bath_temperature());
    const double f_r = fermi(params.eps_a, params.right);

    RateSet5 r;
    for (int n = 0; n < 2; ++n) {
        const double fc = franck_condon_weight(n, params);
        const double f_l = fermi(params.eps_d + n * params.omega0, params.left);
        const double empty_l = fermi_complement(params.eps_d + n * params.omega0, params.left);
        r.gL_plus[n] = params.gamma_L * fc * f_l;
        r.gL_minus[n] = params.gamma_L * fc * empty_l;
        r.k_DA[n] = params.gamma_DA * fc * (1.0 + n_b);
        r.k_AD[n] = params.gamma_AD * fc * n_b;
    }
    r.gR_plus[0] = params.gamma_R * f_r;
    r.gR_minus[0] = params.gamma_R * fermi_complement(params.eps_a, params.right);
    r.up = params.gamma0 * n_b;
    r.down = params.gamma0 * (1.0 + n_b);
    return r;
}

Generator multilevel_generator(const RateSet5& r) {
    Generator l;
    // clang-format off
    l << -(r.gL_plus[0] + r.gL_plus[1] + r.gR_plus[0] + r.gR_plus[1]),
             r.gL_minus[0], r.gL_minus[1], r.gR_minus[0], r.gR_minus[1],
         r.gL_plus[0], -(r.gL_minus[0] + r.k_DA[0] + r.up), r.down, r.k_AD[0], 0.0,
         r.gL_plus[1], r.up, -(r.gL_minus[1] + r.k_DA[1] + r.down), 0.0, r.k_AD[1],
         r.gR_plus[0], r.k_DA[0], 0.0, -(r.gR_minus[0] + r.k_AD[0] + r.up), r.down,
         r.gR_plus[1], 0.0, r.k_DA[1], r.up, -(r.gR_minus[1] + r.k_AD[1] + r.down);
    // clang-format on
    return l;
}

std::vector<std::vector<std::size_t>> closed_classes(const Generator& gen) {
    constexpr std::size_t n = kStates;
    std::array<std::array<bool, n>, n> reach{};
    for (std::size_t i = 0; i < n; ++i) {
        reach[i][i] = true;
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && gen(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) > 0.0)
                reach[i][j] = true; // flow i -> j
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);

    std::vector<std::vector<std::size_t>> classes;
    std::array<bool, n> assigned{};
    for (std::size_t i = 0; i < n; ++i) {
        if (assigned[i])
            continue;
        std::vector<std::size_t> cls;
        for (std::size_t j = 0; j < n; ++j)
            if (reach[i][j] && reach[j][i]) {
                cls.push_back(j);
                assigned[j] = true;
            }
        // Closed: nothing reachable from the class lies outside it.
        bool closed = true;
        for (std::size_t j = 0; j < n && closed; ++j)
            if (reach[i][j] && std::find(cls.begin(), cls.end(), j) == cls.end())
                closed = false;
        if (closed)
            classes.push_back(std::move(cls));
    }
    return classes;
}

PopulationVector5 multilevel_steady_state(const Generator& gen) {
    const auto classes = closed_classes(gen);
    if (classes.size() != 1) {
        std::string blocks;
        for (const auto& cls : classes) {
            blocks += blocks.empty() ? "{" : ", {";
            for (std::size_t k = 0; k < cls.size(); ++k)
                blocks += (k ? " " : "") + std::string(state_name(cls[k]));
            blocks += "}";
        }
        throw DegenerateSteadyStateError("five-state generator has " + std::to_string(classes.size()) +
                                         " disconnected closed blocks: " + blocks);
    }
    Generator a = gen;
    a.row(kStates - 1).setOnes();
    PopulationVector5 rhs = PopulationVector5::Zero();
    rhs(kStates - 1) = 1.0;
    const PopulationVector5 p = a.partialPivLu().solve(rhs);
    return clamp_distribution(p, kSteadyClamp, "steady state");
}

PopulationVector5 steady_state_from_spectrum(const Generator& gen) {
    Eigen::EigenSolver<Generator> solver(gen);
    const auto& values = solver.eigenvalues();
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < values.size(); ++i)
        if (std::abs(values(i)) < std::abs(values(best)))
            best = i;
    PopulationVector5 v = solver.eigenvectors().col(best).real();
    v /= v.sum();
    return clamp_distribution(v, kSteadyClamp, "spectral steady state");
}

PopulationVector5 propagate_multilevel(const PopulationVector5& rho0, double t, const Generator& gen) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("propagation time must be >= 0, got " + show(t));
    if (t == 0.0)
        return rho0;
    const Generator scaled = gen * t;
    const Generator propagator = scaled.exp();
    return clamp_distribution(propagator * rho0, kPropagateClamp, "propagation");
}

} // namespace dar::multilevel
