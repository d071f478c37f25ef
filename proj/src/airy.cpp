#include "airybasis/airy.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "airybasis/errors.hpp"

namespace airybasis {
namespace {

using ld = long double;

constexpr ld kGammaOneThird = 2.6789385347077476337L;
constexpr ld kGammaTwoThirds = 1.3541179394264004169L;
constexpr ld kPi = 3.14159265358979323846264338327950288L;

// Ai(0) = 3^{-2/3}/Gamma(2/3), -Ai'(0) = 3^{-1/3}/Gamma(1/3).
const ld kAi0 = 1.0L / (std::cbrt(9.0L) * kGammaTwoThirds);
const ld kMinusAiPrime0 = 1.0L / (std::cbrt(3.0L) * kGammaOneThird);

constexpr double kSeriesLimit = 8.0;
constexpr ld kSeriesCutoff = 1e-18L;
constexpr int kMaxTerms = 400;

struct SeriesSum {
    ld sum = 0.0L;
    ld abs_sum = 0.0L;
    ld last = 0.0L;
};

// Generic power series with term_k = term_{k-1} * x^3 / denom(k).
template <typename Denominator>
SeriesSum cubic_series(ld first, ld x3, int k_start, Denominator denom) {
    SeriesSum s;
    ld term = first;
    s.sum = term;
    s.abs_sum = std::fabs(term);
    s.last = term;
    if (term == 0.0L) return s;
    for (int k = k_start; k < kMaxTerms; ++k) {
        term *= x3 / denom(k);
        s.sum += term;
        s.abs_sum += std::fabs(term);
        s.last = term;
        if (std::fabs(term) < kSeriesCutoff * s.abs_sum) break;
    }
    return s;
}

double rounding_bound(ld abs_sum, ld last, ld coefficient) {
    const ld bound = coefficient * (abs_sum * 64.0L * LDBL_EPSILON + 2.0L * std::fabs(last));
    return static_cast<double>(bound);
}

AiryEval ai_series(double xd) {
    const ld x = xd;
    const ld x3 = x * x * x;
    const auto f = cubic_series(1.0L, x3, 1, [](int k) { return ld(3 * k - 1) * ld(3 * k); });
    const auto g = cubic_series(x, x3, 1, [](int k) { return ld(3 * k) * ld(3 * k + 1); });
    const ld value = kAi0 * f.sum - kMinusAiPrime0 * g.sum;
    const double bound = rounding_bound(f.abs_sum, f.last, kAi0) +
                         rounding_bound(g.abs_sum, g.last, kMinusAiPrime0) +
                         DBL_EPSILON * std::fabs(static_cast<double>(value));
    return {static_cast<double>(value), bound};
}

AiryEval ai_prime_series(double xd) {
    const ld x = xd;
    const ld x3 = x * x * x;
    // f' = sum_{k>=1} x^{3k-1} (1*4*..*(3k-2))/(3k-1)!, g' = sum_{k>=0} x^{3k} (2*5*..*(3k-1))/(3k)!
    const auto fp = cubic_series(x * x / 2.0L, x3, 2, [](int k) { return ld(3 * k - 1) * ld(3 * k - 3); });
    const auto gp = cubic_series(1.0L, x3, 1, [](int k) { return ld(3 * k) * ld(3 * k - 2); });
    const ld value = kAi0 * fp.sum - kMinusAiPrime0 * gp.sum;
    const double bound = rounding_bound(fp.abs_sum, fp.last, kAi0) +
                         rounding_bound(gp.abs_sum, gp.last, kMinusAiPrime0) +
                         DBL_EPSILON * std::fabs(static_cast<double>(value));
    return {static_cast<double>(value), bound};
}

// Partial sums of the asymptotic series in 1/zeta. `even` collects the u_{2k} (or v_{2k})
// terms with alternating sign (-1)^k, `odd` the u_{2k+1} terms; `all` is sum (-1)^k c_k zeta^-k.
struct AsymptoticSums {
    ld all = 0.0L;
    ld even = 0.0L;
    ld odd = 0.0L;
    ld omitted = 0.0L;
};

AsymptoticSums asymptotic_sums(ld zeta, bool derivative) {
    AsymptoticSums s;
    ld u = 1.0L;
    ld power = 1.0L;
    ld previous = INFINITY;
    for (int k = 0; k < 60; ++k) {
        if (k > 0) {
            u *= ld(6 * k - 5) * ld(6 * k - 3) * ld(6 * k - 1) / (ld(2 * k - 1) * 216.0L * ld(k));
            power /= zeta;
        }
        const ld coefficient = derivative ? -ld(6 * k + 1) / ld(6 * k - 1) * u : u;
        const ld term = coefficient * power;
        if (std::fabs(term) > previous) {
            s.omitted = previous;
            return s;
        }
        const ld sign_all = (k % 2 == 0) ? 1.0L : -1.0L;
        const ld sign_half = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
        s.all += sign_all * term;
        if (k % 2 == 0) {
            s.even += sign_half * term;
        } else {
            s.odd += sign_half * term;
        }
        previous = std::fabs(term);
        if (std::fabs(term) < 1e-19L) {
            s.omitted = std::fabs(term);
            return s;
        }
    }
    s.omitted = previous;
    return s;
}

AiryEval ai_asymptotic(double xd, bool derivative) {
    const ld sqrt_pi = std::sqrt(kPi);
    if (xd > 0.0) {
        const ld x = xd;
        const ld zeta = 2.0L / 3.0L * x * std::sqrt(x);
        const auto s = asymptotic_sums(zeta, derivative);
        const ld quarter = std::sqrt(std::sqrt(x));
        const ld prefactor = derivative ? -quarter * std::exp(-zeta) / (2.0L * sqrt_pi)
                                        : std::exp(-zeta) / (2.0L * sqrt_pi * quarter);
        const ld value = prefactor * s.all;
        const double bound = static_cast<double>(std::fabs(prefactor) * (2.0L * s.omitted + 16.0L * LDBL_EPSILON)) +
                             DBL_EPSILON * std::fabs(static_cast<double>(value));
        return {static_cast<double>(value), bound};
    }
    const ld y = -static_cast<ld>(xd);
    const ld zeta = 2.0L / 3.0L * y * std::sqrt(y);
    const auto s = asymptotic_sums(zeta, derivative);
    const ld quarter = std::sqrt(std::sqrt(y));
    const ld phase = zeta - kPi / 4.0L;
    const ld c = std::cos(phase);
    const ld sn = std::sin(phase);
    ld value = 0.0L;
    ld prefactor = 0.0L;
    if (!derivative) {
        prefactor = 1.0L / (sqrt_pi * quarter);
        value = prefactor * (c * s.even + sn * s.odd);
    } else {
        prefactor = quarter / sqrt_pi;
        value = prefactor * (sn * s.even - c * s.odd);
    }
    const double bound = static_cast<double>(prefactor * (2.0L * s.omitted + 16.0L * LDBL_EPSILON * (1.0L + zeta))) +
                         DBL_EPSILON * std::fabs(static_cast<double>(value));
    return {static_cast<double>(value), bound};
}

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

void require_index(int n, const char* what) {
    if (n < 1) throw DomainError(std::string(what) + ": zero index must be >= 1");
}

// Newton refinement; `step` returns the Newton correction at x.
template <typename Step>
double newton(double x, Step step, const char* what) {
    for (int iter = 0; iter < 50; ++iter) {
        const double dx = step(x);
        x -= dx;
        if (std::fabs(dx) < 1e-12) return x;
    }
    throw ConvergenceError(std::string(what) + ": Newton iteration did not converge");
}

}  // namespace

AiryEval airy_ai(double x) {
    require_finite(x, "airy_ai");
    if (std::fabs(x) <= kSeriesLimit) return ai_series(x);
    return ai_asymptotic(x, false);
}

AiryEval airy_ai_prime(double x) {
    require_finite(x, "airy_ai_prime");
    if (std::fabs(x) <= kSeriesLimit) return ai_prime_series(x);
    return ai_asymptotic(x, true);
}

double airy_zero(int n) {
    require_index(n, "airy_zero");
    const double t = 3.0 * std::numbers::pi * (4.0 * n - 1.0) / 8.0;
    const double t2 = 1.0 / (t * t);
    const double seed = -std::pow(t, 2.0 / 3.0) * (1.0 + 5.0 / 48.0 * t2 - 5.0 / 36.0 * t2 * t2);
    return newton(seed, [](double x) { return airy_ai(x).value / airy_ai_prime(x).value; }, "airy_zero");
}

double airy_prime_zero(int n) {
    require_index(n, "airy_prime_zero");
    const double t = 3.0 * std::numbers::pi * (4.0 * n - 3.0) / 8.0;
    const double t2 = 1.0 / (t * t);
    const double seed = -std::pow(t, 2.0 / 3.0) * (1.0 - 7.0 / 48.0 * t2 + 35.0 / 288.0 * t2 * t2);
    // (Ai')' = x Ai by the Airy equation.
    return newton(seed, [](double x) { return airy_ai_prime(x).value / (x * airy_ai(x).value); },
                  "airy_prime_zero");
}

ZeroTable zero_table(int count) {
    if (count < 0) throw DomainError("zero_table: count must be non-negative");
    ZeroTable table;
    table.ai_zeros.reserve(count);
    table.ai_prime_zeros.reserve(count);
    for (int n = 1; n <= count; ++n) {
        table.ai_zeros.push_back(airy_zero(n));
        table.ai_prime_zeros.push_back(airy_prime_zero(n));
    }
    return table;
}

}  // namespace airybasis
