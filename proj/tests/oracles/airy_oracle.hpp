#pragma once

// Independent reference values for Airy functions and their zeros, from Boost.Math.

#include <boost/math/special_functions/airy.hpp>

#include <cmath>
#include <stdexcept>

namespace oracle {

inline double ai(double x) { return boost::math::airy_ai(x); }
inline double ai_prime(double x) { return boost::math::airy_ai_prime(x); }
inline double ai_zero(int n) { return boost::math::airy_ai_zero<double>(n); }

/// n-th zero of Ai' by bisection between consecutive zeros of Ai (a'_1 lies in (a_1, 0)).
inline double ai_prime_zero(int n) {
    double hi = n == 1 ? 0.0 : ai_zero(n - 1);
    double lo = ai_zero(n);
    if (ai_prime(lo) * ai_prime(hi) > 0.0) throw std::logic_error("ai_prime_zero: no bracket");
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::fabs(lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        (ai_prime(mid) * ai_prime(lo) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

/// Closed-form normalization of the lambda|x| eigenstates:
///   even: N = sqrt(s / (2 (-a') Ai(a')^2)),  odd: N = sqrt(s / (2 Ai'(a)^2)),  s = (2 lambda)^{1/3}.
inline double normalization(int n, double lambda) {
    const double s = std::cbrt(2.0 * lambda);
    const int k = n / 2 + 1;
    if (n % 2 == 0) {
        const double z = ai_prime_zero(k);
        return std::sqrt(s / (2.0 * -z * ai(z) * ai(z)));
    }
    const double z = ai_zero(k);
    return std::sqrt(s / (2.0 * ai_prime(z) * ai_prime(z)));
}

}  // namespace oracle
