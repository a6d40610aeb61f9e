// ode_oracle.hpp — Adaptive Dormand-Prince 5(4) integrator for linear systems dp/dt = L p.
// Test-only reference for the matrix-exponential and closed-form propagators.

#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace dar::testing {

struct OdeTolerance {
    double abs{1e-10};
    double rel{1e-8};
};

template <typename Matrix, typename Vector>
Vector integrate_linear(const Matrix& l, Vector p, double t_end, OdeTolerance tol = {}) {
    // Butcher tableau (Dormand & Prince 1980).
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                     a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                     e6 = 22.0 / 525, e7 = -1.0 / 40;
    (void)c2, (void)c3, (void)c4, (void)c5; // autonomous system

    double t = 0.0;
    double h = std::min(t_end, 1e-3 / std::max(1.0, l.cwiseAbs().maxCoeff()));
    Vector k1 = l * p;
    int steps = 0;
    while (t < t_end) {
        if (++steps > 50'000'000)
            throw std::runtime_error("ode oracle: too many steps");
        h = std::min(h, t_end - t);
        const Vector k2 = l * (p + h * a21 * k1);
        const Vector k3 = l * (p + h * (a31 * k1 + a32 * k2));
        const Vector k4 = l * (p + h * (a41 * k1 + a42 * k2 + a43 * k3));
        const Vector k5 = l * (p + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        const Vector k6 = l * (p + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        const Vector next = p + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        const Vector k7 = l * next;
        const Vector err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double norm = 0.0;
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            const double scale = tol.abs + tol.rel * std::max(std::abs(p(i)), std::abs(next(i)));
            norm = std::max(norm, std::abs(err(i)) / scale);
        }
        if (norm <= 1.0) {
            t += h;
            p = next;
            k1 = k7;
        }
        const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
        h *= factor;
    }
    return p;
}

} // namespace dar::testing
