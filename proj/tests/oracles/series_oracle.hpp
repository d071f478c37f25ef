#pragma once

// Closed forms of Ai and Ai' at the origin.

#include <cmath>

namespace oracle {

/// Ai(0) = 1 / (3^{2/3} Gamma(2/3)).
inline double ai_at_zero() { return 1.0 / (std::cbrt(9.0) * std::tgamma(2.0 / 3.0)); }

/// Ai'(0) = -1 / (3^{1/3} Gamma(1/3)).
inline double ai_prime_at_zero() { return -1.0 / (std::cbrt(3.0) * std::tgamma(1.0 / 3.0)); }

}  // namespace oracle
