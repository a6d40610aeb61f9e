// multilevel.hpp — Five-state vibronic rectifier
//
// Basis order: |0>, |D_0>, |D_1>, |A_0>, |A_1> (empty, donor with vibration n = 0/1,
// acceptor with vibration n = 0/1). Rates and time in eV and hbar/eV.

#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "dar/params.hpp"

namespace dar::multilevel {

inline constexpr std::size_t kStates = 5;

enum State : std::size_t { empty = 0, donor0 = 1, donor1 = 2, acceptor0 = 3, acceptor1 = 4 };

using Generator = Eigen::Matrix<double, 5, 5>;
using PopulationVector5 = Eigen::Matrix<double, 5, 1>;

struct RateSet5 {
    std::array<double, 2> gL_plus{};  // left lead -> donor, vibration level n
    std::array<double, 2> gL_minus{}; // donor -> left lead
    std::array<double, 2> gR_plus{};  // right lead -> acceptor (n = 0 only)
    std::array<double, 2> gR_minus{};
    std::array<double, 2> k_DA{};     // donor -> acceptor, phonon assisted
    std::array<double, 2> k_AD{};     // acceptor -> donor
    double up{0.0};                   // vibrational excitation gamma0 * n_B
    double down{0.0};                 // vibrational relaxation gamma0 * (1 + n_B)
};

// Overlap |<n|exp[(lambda/omega0)(b^+ - b)]|0>|^2 for n in {0, 1}.
double franck_condon(int n, double lambda, double omega0);

// F_n used by the rates: 1 when lambda == 0, the displaced overlap otherwise.
double franck_condon_weight(int n, const MultilevelParams& params);

RateSet5 multilevel_rates(const MultilevelParams& params);

Generator multilevel_generator(const RateSet5& rates);

// Kernel of the generator normalised to a distribution, solved with the last row of L
// replaced by ones. Throws DegenerateSteadyStateError when the rate graph has more than
// one closed block.
PopulationVector5 multilevel_steady_state(const Generator& gen);

// Same kernel obtained from the eigenvector of the eigenvalue closest to zero.
PopulationVector5 steady_state_from_spectrum(const Generator& gen);

// exp(gen * t) * rho0 by Pade scaling-and-squaring.
PopulationVector5 propagate_multilevel(const PopulationVector5& rho0, double t, const Generator& gen);

// Closed communicating classes of the rate graph (edge j -> i when gen(i, j) > 0).
std::vector<std::vector<std::size_t>> closed_classes(const Generator& gen);

std::string_view state_name(std::size_t index);

} // namespace dar::multilevel
