// random_params.hpp — Seeded random parameter draws for property tests

#pragma once

#include <random>

#include "dar/params.hpp"

namespace dar::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline JunctionParams random_junction(std::mt19937_64& rng) {
    JunctionParams p;
    p.eps_d = uniform(rng, -3.0, 3.0);
    p.eps_a = uniform(rng, -3.0, 3.0);
    p.omega0 = uniform(rng, 0.01, 1.0);
    p.gamma_hyb = uniform(rng, 0.1, 2.0);
    p.left = {uniform(rng, -2.0, 2.0), uniform(rng, 0.2, 3.0)};
    p.right = {uniform(rng, -2.0, 2.0), uniform(rng, 0.2, 3.0)};
    return p;
}

inline MultilevelParams random_multilevel(std::mt19937_64& rng) {
    MultilevelParams p;
    p.eps_d = uniform(rng, -3.0, 3.0);
    p.eps_a = uniform(rng, -3.0, 3.0);
    p.omega0 = uniform(rng, 0.02, 1.0);
    p.gamma_L = uniform(rng, 0.1, 2.0);
    p.gamma_R = uniform(rng, 0.1, 2.0);
    p.gamma_DA = uniform(rng, 0.1, 2.0);
    p.gamma_AD = uniform(rng, 0.1, 2.0);
    p.gamma0 = uniform(rng, 0.05, 1.0);
    p.left = {uniform(rng, -2.0, 2.0), uniform(rng, 0.2, 2.0)};
    p.right = {uniform(rng, -2.0, 2.0), uniform(rng, 0.2, 2.0)};
    p.t_vib = uniform(rng, 0.2, 2.0);
    return p;
}

} // namespace dar::testing
