// errors.hpp — Exception types shared by the rectifier library

#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace dar {

// Six significant digits for values quoted in diagnostics.
inline std::string show(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Input outside the mathematical domain of an operation (negative temperature,
// non-finite energy, negative time, parameter not valid for the model, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Two-level generator with zero total rate: no unique steady state.
class DegenerateGeneratorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rate graph splits into more than one closed block.
class DegenerateSteadyStateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A population dropped below the Fisher positivity floor.
class SmallProbabilityError : public std::runtime_error {
public:
    SmallProbabilityError(std::size_t state, double value, const std::string& msg)
        : std::runtime_error(msg), state_(state), value_(value) {}

    std::size_t state() const noexcept { return state_; }
    double value() const noexcept { return value_; }

private:
    std::size_t state_;
    double value_;
};

// Linear algebra produced a result outside tolerance (e.g. a clearly negative population).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed configuration file or sweep specification.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace dar
