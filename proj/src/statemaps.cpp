#include "airybasis/statemaps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "airybasis/errors.hpp"

namespace airybasis {
namespace {

constexpr double kTaperFraction = 0.2;
constexpr double kRefinementTolerance = 1e-6;
constexpr double kNarrowFraction = 0.75;
// Bounds the window error of the reduced range; an order below the accuracy the bridge is used at.
constexpr double kWindowTolerance = 1e-4;

const double kInvSqrt2Pi = 1.0 / std::sqrt(2.0 * std::numbers::pi);

// Trapezoid weights on the momentum grid.
double momentum_weight(const MomentumGrid& pgrid, std::size_t i) {
    return i == 0 || i + 1 == pgrid.size() ? 0.5 * pgrid.spacing() : pgrid.spacing();
}

Complex windowed_airy_integral(double x, const MomentumGrid& pgrid) {
    const auto window = momentum_window(pgrid);
    Complex sum{};
    for (std::size_t i = 0; i < pgrid.size(); ++i) {
        const double p = pgrid.point(i);
        sum += momentum_weight(pgrid, i) * window[i] * std::polar(1.0, p * p * p / 3.0 + x * p);
    }
    return sum / (2.0 * std::numbers::pi);
}

double kernel_value(const MomentumGrid& pgrid, const std::vector<double>& window, double d) {
    double sum = 0.0;
    for (std::size_t i = 0; i < pgrid.size(); ++i) sum += momentum_weight(pgrid, i) * window[i] * std::cos(pgrid.point(i) * d);
    return sum / (2.0 * std::numbers::pi);
}

// Same spacing over a reduced range; agreement shows the window has converged.
MomentumGrid narrowed(const MomentumGrid& pgrid) {
    const auto intervals = static_cast<std::size_t>(std::lround(kNarrowFraction * static_cast<double>(pgrid.size() - 1)));
    const double edge = 0.5 * static_cast<double>(intervals) * pgrid.spacing();
    return MomentumGrid(-edge, edge, intervals + 1);
}

void require_same_length(const std::vector<Complex>& profile, const MomentumGrid& pgrid) {
    if (profile.size() != pgrid.size()) throw DomainError("momentum profile length does not match the grid");
}

}  // namespace

MomentumGrid::MomentumGrid(double p_min, double p_max, std::size_t n_points)
    : p_min_(p_min), p_max_(p_max), n_points_(n_points), spacing_(0.0) {
    if (!std::isfinite(p_min) || !std::isfinite(p_max) || !(p_min < p_max)) {
        throw DomainError("MomentumGrid: need finite p_min < p_max");
    }
    if (std::fabs(p_min + p_max) > 1e-12 * p_max) throw DomainError("MomentumGrid: range must be symmetric about 0");
    if (n_points < 3) throw DomainError("MomentumGrid: need at least 3 points");
    spacing_ = (p_max - p_min) / static_cast<double>(n_points - 1);
}

MomentumGrid MomentumGrid::coarsened() const { return MomentumGrid(p_min_, p_max_, (n_points_ + 1) / 2); }

std::vector<double> momentum_window(const MomentumGrid& pgrid) {
    const double edge = pgrid.p_max();
    const double flat = (1.0 - kTaperFraction) * edge;
    std::vector<double> w(pgrid.size());
    for (std::size_t i = 0; i < pgrid.size(); ++i) {
        const double a = std::fabs(pgrid.point(i));
        if (a <= flat) {
            w[i] = 1.0;
        } else if (a >= edge) {
            w[i] = 0.0;
        } else {
            w[i] = 0.5 * (1.0 + std::cos(std::numbers::pi * (a - flat) / (edge - flat)));
        }
    }
    return w;
}

std::vector<Complex> airy_momentum_profile(const MomentumGrid& pgrid) {
    std::vector<Complex> out(pgrid.size());
    for (std::size_t i = 0; i < pgrid.size(); ++i) {
        const double p = pgrid.point(i);
        out[i] = kInvSqrt2Pi * std::polar(1.0, p * p * p / 3.0);
    }
    return out;
}

std::vector<Complex> apply_cubic_phase(std::vector<Complex> profile, const MomentumGrid& pgrid, int sign) {
    require_same_length(profile, pgrid);
    for (std::size_t i = 0; i < profile.size(); ++i) {
        const double p = pgrid.point(i);
        profile[i] *= std::polar(1.0, sign * p * p * p / 3.0);
    }
    return profile;
}

std::vector<Complex> apply_translation_phase(std::vector<Complex> profile, const MomentumGrid& pgrid, double x,
                                             int sign) {
    require_same_length(profile, pgrid);
    for (std::size_t i = 0; i < profile.size(); ++i) profile[i] *= std::polar(1.0, sign * x * pgrid.point(i));
    return profile;
}

Complex airy_from_momentum(double x, const MomentumGrid& pgrid) {
    if (!std::isfinite(x)) throw DomainError("airy_from_momentum: x must be finite");
    const double max_rate = pgrid.p_max() * pgrid.p_max() + std::fabs(x);
    if (2.0 * pgrid.spacing() * max_rate >= std::numbers::pi) {
        throw PrecisionError("airy_from_momentum: momentum sampling too coarse for the phase");
    }
    const Complex fine = windowed_airy_integral(x, pgrid);
    const Complex coarse = windowed_airy_integral(x, pgrid.coarsened());
    if (std::abs(fine - coarse) > kRefinementTolerance) {
        throw PrecisionError("airy_from_momentum: result not converged under sampling refinement");
    }
    const Complex narrow = windowed_airy_integral(x, narrowed(pgrid));
    if (std::abs(fine - narrow) > kWindowTolerance) {
        throw PrecisionError("airy_from_momentum: momentum window too small for x");
    }
    return fine;
}

WaveFunction from_momentum(const std::vector<Complex>& profile, const MomentumGrid& pgrid, const Grid& grid) {
    require_same_length(profile, pgrid);
    std::vector<Complex> out(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const double y = grid.point(j);
        Complex sum{};
        for (std::size_t i = 0; i < pgrid.size(); ++i) {
            sum += momentum_weight(pgrid, i) * std::polar(1.0, pgrid.point(i) * y) * profile[i];
        }
        out[j] = kInvSqrt2Pi * sum;
    }
    return WaveFunction(grid, std::move(out));
}

std::vector<Complex> to_momentum(const WaveFunction& psi, const MomentumGrid& pgrid) {
    const Grid& grid = psi.grid();
    const auto w = quadrature_weights(grid);
    std::vector<Complex> out(pgrid.size());
    for (std::size_t i = 0; i < pgrid.size(); ++i) {
        const double p = pgrid.point(i);
        Complex sum{};
        for (std::size_t j = 0; j < grid.size(); ++j) sum += w[j] * std::polar(1.0, -p * grid.point(j)) * psi[j];
        out[i] = kInvSqrt2Pi * sum;
    }
    return out;
}

WaveFunction position_from_airy(double x, const Grid& grid, const MomentumGrid& pgrid) {
    if (!std::isfinite(x)) throw DomainError("position_from_airy: x must be finite");
    if (grid.spacing() > std::numbers::pi / pgrid.p_max()) {
        throw PrecisionError("position_from_airy: grid spacing cannot resolve the momentum window");
    }
    auto profile = airy_momentum_profile(pgrid);
    const auto window = momentum_window(pgrid);
    for (std::size_t i = 0; i < profile.size(); ++i) profile[i] *= window[i];
    profile = apply_cubic_phase(std::move(profile), pgrid, -1);
    profile = apply_translation_phase(std::move(profile), pgrid, x, -1);
    return from_momentum(profile, pgrid, grid);
}

double position_kernel_width(const MomentumGrid& pgrid) {
    const auto window = momentum_window(pgrid);
    const double half = 0.5 * kernel_value(pgrid, window, 0.0);
    // The kernel is at least as narrow as the one of the flat part, whose first zero is pi / p_flat.
    double lo = 0.0;
    double hi = std::numbers::pi / ((1.0 - kTaperFraction) * pgrid.p_max());
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (kernel_value(pgrid, window, mid) > half ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

FockVector fock_position_state(double x, int n_max) {
    if (n_max < 1) throw DomainError("fock_position_state: n_max must be at least 1");
    if (!std::isfinite(x)) throw DomainError("fock_position_state: x must be finite");
    if (x * x > 2.0 * n_max + 1.0) {
        throw PrecisionError("fock_position_state: |x| beyond the reach of n_max = " + std::to_string(n_max));
    }
    FockVector v{n_max, std::vector<double>(static_cast<std::size_t>(n_max) + 1)};
    auto& d = v.coeffs;
    d[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    d[1] = std::numbers::sqrt2 * x * d[0];
    for (int n = 1; n < n_max; ++n) {
        const auto k = static_cast<std::size_t>(n);
        d[k + 1] = (std::numbers::sqrt2 * x * d[k] - std::sqrt(static_cast<double>(n)) * d[k - 1]) /
                   std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

double quadrature_expectation(const FockVector& v) {
    double norm2 = 0.0;
    double cross = 0.0;
    for (std::size_t n = 0; n < v.coeffs.size(); ++n) {
        norm2 += v.coeffs[n] * v.coeffs[n];
        if (n + 1 < v.coeffs.size()) cross += std::sqrt(0.5 * static_cast<double>(n + 1)) * v.coeffs[n] * v.coeffs[n + 1];
    }
    if (!(norm2 > 0.0)) throw DomainError("quadrature_expectation: zero vector");
    return 2.0 * cross / norm2;
}

double quadrature_residual(const FockVector& v, double x) {
    const auto& d = v.coeffs;
    double scale = 0.0;
    for (double c : d) scale = std::max(scale, std::fabs(c));
    if (!(scale > 0.0)) throw DomainError("quadrature_residual: zero vector");
    double worst = 0.0;
    for (std::size_t n = 0; n + 1 < d.size(); ++n) {
        double xv = std::sqrt(0.5 * static_cast<double>(n + 1)) * d[n + 1];
        if (n > 0) xv += std::sqrt(0.5 * static_cast<double>(n)) * d[n - 1];
        worst = std::max(worst, std::fabs(xv - x * d[n]));
    }
    return worst / scale;
}

double overlap(const FockVector& a, const FockVector& b) {
    if (a.coeffs.size() != b.coeffs.size()) throw DomainError("overlap: truncations differ");
    double sum = 0.0;
    for (std::size_t n = 0; n < a.coeffs.size(); ++n) sum += a.coeffs[n] * b.coeffs[n];
    return sum;
}

}  // namespace airybasis
