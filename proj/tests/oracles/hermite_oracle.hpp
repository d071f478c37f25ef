#pragma once

// Harmonic-oscillator eigenfunctions from the physicists' Hermite recurrence
// H_{n+1} = 2x H_n - 2n H_{n-1}, normalized through log-gamma.

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

inline std::vector<double> oscillator_eigenfunctions(double x, int n_max) {
    std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
    long double h_prev = 0.0L;
    long double h = 1.0L;
    for (int n = 0; n <= n_max; ++n) {
        const long double log_norm = 0.5L * (n * std::log(2.0L) + std::lgamma(static_cast<long double>(n) + 1.0L) +
                                             0.5L * std::log(std::numbers::pi_v<long double>));
        out[static_cast<std::size_t>(n)] =
            static_cast<double>(h * std::exp(-0.5L * x * x - log_norm));
        const long double next = 2.0L * x * h - 2.0L * n * h_prev;
        h_prev = h;
        h = next;
    }
    return out;
}

}  // namespace oracle
