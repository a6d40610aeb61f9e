// optimize.hpp — Golden-section maximisation on a bracket

#pragma once

#include <cmath>
#include <functional>

namespace dar {

struct ScalarMax {
    double x{0.0};
    double value{0.0};
};

// Maximise a unimodal f on [lo, hi] until the bracket is narrower than tol.
inline ScalarMax golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                         double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? ScalarMax{c, fc} : ScalarMax{d, fd};
}

} // namespace dar
