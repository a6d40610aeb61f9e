// distributions.hpp — Fermi and Bose occupation functions (k_B = 1, energies in eV)

#pragma once

namespace dar {

struct Reservoir {
    double mu{0.0};          // chemical potential
    double temperature{1.0}; // k_B T
};

// Fermi-Dirac occupation 1/(exp((e-mu)/T)+1), evaluated without overflow.
double fermi(double energy, const Reservoir& res);

// 1 - fermi, accurate when the occupation is close to 1.
double fermi_complement(double energy, const Reservoir& res);

// d fermi / d energy = -f(1-f)/T
double fermi_denergy(double energy, const Reservoir& res);

// Bose-Einstein occupation 1/(exp(omega/T)-1); omega > 0.
double bose(double omega, double temperature);

// d bose / d omega
double bose_domega(double omega, double temperature);

// Smallest vibrational quantum accepted by sweeps that run down to omega0 = 0.
inline constexpr double kOmegaFloor = 1e-6;

} // namespace dar
