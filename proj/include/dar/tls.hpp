// tls.hpp — Two-level (spin-fermion mapped) donor-acceptor rectifier
//
// Populations p = (p1, p2) of the donor and acceptor states obey dp/dt = L p with
//
//     L = gamma_hyb * [ -(a_da+ + a_ad+)    a_da- + a_ad-  ]
//                     [   a_da+ + a_ad+   -(a_da- + a_ad-) ]
//
// Time is measured in hbar/eV.

#pragma once

#include <Eigen/Dense>

#include "dar/params.hpp"

namespace dar::tls {

// Dimensionless inelastic transfer factors (products of Fermi factors).
struct RateSet2 {
    double a_da_plus{0.0};  // donor -> acceptor, vibration excited
    double a_ad_plus{0.0};  // acceptor -> donor, vibration excited
    double a_da_minus{0.0}; // donor -> acceptor, vibration relaxed
    double a_ad_minus{0.0}; // acceptor -> donor, vibration relaxed

    double forward() const { return a_da_plus + a_ad_plus; }
    double backward() const { return a_da_minus + a_ad_minus; }
    double total() const { return forward() + backward(); }
};

struct PopulationVector2 {
    double p1{1.0}; // donor
    double p2{0.0}; // acceptor
};

RateSet2 tls_rates(const JunctionParams& params);

Eigen::Matrix2d tls_generator(const RateSet2& rates, double gamma_hyb);

// Closed-form kernel of the generator. Throws DegenerateGeneratorError when all rates vanish.
PopulationVector2 tls_steady_state(const RateSet2& rates);

// Relaxation rate gamma_hyb * (sum of the four factors): the nonzero eigenvalue of -L.
double decay_rate(const RateSet2& rates, double gamma_hyb);

// Closed-form relaxation p(t) = p_ss + (p0 - p_ss) exp(-decay_rate * t).
PopulationVector2 tls_propagate(const PopulationVector2& p0, double t, const JunctionParams& params);
PopulationVector2 tls_propagate(const PopulationVector2& p0, double t, const RateSet2& rates,
                                double gamma_hyb);

} // namespace dar::tls
