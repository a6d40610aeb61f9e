// tls.cpp — Two-level rectifier rates, generator and closed-form evolution

#include "dar/tls.hpp"

#include <cmath>

#include "dar/errors.hpp"

namespace dar::tls {

RateSet2 tls_rates(const JunctionParams& params) {
    params.validate();
    const double f_l = fermi(params.eps_d, params.left);
    const double f_r = fermi(params.eps_a, params.right);
    const double w = params.omega0;

    RateSet2 r;
    r.a_da_plus = f_l * fermi_complement(params.eps_a + w, params.right);
    r.a_ad_plus = f_r * fermi_complement(params.eps_d + w, params.left);
    r.a_da_minus = f_l * fermi_complement(params.eps_a - w, params.right);
    r.a_ad_minus = f_r * fermi_complement(params.eps_d - w, params.left);
    return r;
}

Eigen::Matrix2d tls_generator(const RateSet2& rates, double gamma_hyb) {
    const double fwd = rates.forward();
    const double bwd = rates.backward();
    Eigen::Matrix2d l;
    l << -fwd, bwd,
          fwd, -bwd;
    return gamma_hyb * l;
}

PopulationVector2 tls_steady_state(const RateSet2& rates) {
    const double sigma = rates.total();
    if (!(sigma > 0.0))
        throw DegenerateGeneratorError("two-level generator has zero total rate; steady state undefined");
    // Each component from its own ratio so tiny populations keep full relative accuracy.
    return {rates.backward() / sigma, rates.forward() / sigma};
}

double decay_rate(const RateSet2& rates, double gamma_hyb) {
    return gamma_hyb * rates.total();
}

PopulationVector2 tls_propagate(const PopulationVector2& p0, double t, const RateSet2& rates,
                                double gamma_hyb) {
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainError("propagation time must be >= 0, got " + show(t));
    if (t == 0.0)
        return p0;
    const auto ss = tls_steady_state(rates);
    const double decay = std::exp(-decay_rate(rates, gamma_hyb) * t);
    return {ss.p1 + (p0.p1 - ss.p1) * decay, ss.p2 + (p0.p2 - ss.p2) * decay};
}

PopulationVector2 tls_propagate(const PopulationVector2& p0, double t, const JunctionParams& params) {
    return tls_propagate(p0, t, tls_rates(params), params.gamma_hyb);
}

} // namespace dar::tls
