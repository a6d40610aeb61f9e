// distributions.cpp — Fermi and Bose occupation functions

#include "dar/distributions.hpp"

#include <cmath>
#include <string>

#include "dar/errors.hpp"

namespace dar {

namespace {

void check_reservoir(double energy, const Reservoir& res) {
    if (!std::isfinite(energy))
        throw DomainError("fermi: energy must be finite");
    if (!std::isfinite(res.mu))
        throw DomainError("fermi: chemical potential must be finite");
    if (!(res.temperature > 0.0) || !std::isfinite(res.temperature))
        throw DomainError("fermi: temperature must be > 0, got " + show(res.temperature));
}

// Returns (f, 1-f) with both complements computed from the non-overflowing branch.
struct Occupation {
    double f;
    double one_minus_f;
};

Occupation occupation(double x) {
    if (x <= 0.0) {
        const double e = std::exp(x);
        return {1.0 / (1.0 + e), e / (1.0 + e)};
    }
    const double e = std::exp(-x);
    return {e / (1.0 + e), 1.0 / (1.0 + e)};
}

} // namespace

double fermi(double energy, const Reservoir& res) {
    check_reservoir(energy, res);
    return occupation((energy - res.mu) / res.temperature).f;
}

double fermi_complement(double energy, const Reservoir& res) {
    check_reservoir(energy, res);
    return occupation((energy - res.mu) / res.temperature).one_minus_f;
}

double fermi_denergy(double energy, const Reservoir& res) {
    check_reservoir(energy, res);
    const auto occ = occupation((energy - res.mu) / res.temperature);
    return -occ.f * occ.one_minus_f / res.temperature;
}

double bose(double omega, double temperature) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw DomainError("bose: omega must be > 0, got " + show(omega));
    if (!(temperature > 0.0) || !std::isfinite(temperature))
        throw DomainError("bose: temperature must be > 0, got " + show(temperature));
    const double x = omega / temperature;
    // exp(-x)/(1-exp(-x)) stays finite for large x; expm1 keeps accuracy for small x.
    if (x > 1.0) {
        const double e = std::exp(-x);
        return e / (1.0 - e);
    }
    return 1.0 / std::expm1(x);
}

double bose_domega(double omega, double temperature) {
    const double n = bose(omega, temperature);
    return -n * (1.0 + n) / temperature;
}

} // namespace dar
