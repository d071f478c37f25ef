#pragma once

#include <cstddef>
#include <vector>

#include "airybasis/quadrature.hpp"

namespace airybasis {

/// Uniform momentum sampling, symmetric about 0.
class MomentumGrid {
public:
    MomentumGrid(double p_min = -12.0, double p_max = 12.0, std::size_t n_points = std::size_t{1} << 14);

    double p_min() const { return p_min_; }
    double p_max() const { return p_max_; }
    std::size_t size() const { return n_points_; }
    double spacing() const { return spacing_; }
    double point(std::size_t i) const { return p_min_ + static_cast<double>(i) * spacing_; }

    /// Every other point; the grid used for the refinement check.
    MomentumGrid coarsened() const;

private:
    double p_min_;
    double p_max_;
    std::size_t n_points_;
    double spacing_;
};

/// Raised-cosine taper: 1 on the inner 80% of the range, falling to 0 over the outer 20%.
std::vector<double> momentum_window(const MomentumGrid& pgrid);

/// <p|Ai> = exp(i p^3/3) / sqrt(2 pi).
std::vector<Complex> airy_momentum_profile(const MomentumGrid& pgrid);

/// Multiplies by exp(sign * i p^3/3).
std::vector<Complex> apply_cubic_phase(std::vector<Complex> profile, const MomentumGrid& pgrid, int sign);

/// Multiplies by exp(sign * i x p).
std::vector<Complex> apply_translation_phase(std::vector<Complex> profile, const MomentumGrid& pgrid, double x,
                                             int sign);

/// (1/2pi) int exp(i(p^3/3 + x p)) W(p) dp.
/// PrecisionError if the sampling cannot resolve the phase, if the half-resolution sum differs by > 1e-6,
/// or if the sum over 3/4 of the range (same spacing) differs by > 1e-4.
Complex airy_from_momentum(double x, const MomentumGrid& pgrid = MomentumGrid{});

/// psi(y) = (1/sqrt(2pi)) int exp(i p y) phi(p) dp on the position grid.
WaveFunction from_momentum(const std::vector<Complex>& profile, const MomentumGrid& pgrid, const Grid& grid);

/// phi(p) = (1/sqrt(2pi)) int exp(-i p y) psi(y) dy.
std::vector<Complex> to_momentum(const WaveFunction& psi, const MomentumGrid& pgrid);

/// exp(-i x p) exp(-i p^3/3) applied to the windowed Airy profile, returned in position space:
/// a narrow kernel centred at x. PrecisionError if the grid spacing exceeds pi / p_max.
WaveFunction position_from_airy(double x, const Grid& grid, const MomentumGrid& pgrid = MomentumGrid{});

/// Half width at half maximum of the position kernel.
double position_kernel_width(const MomentumGrid& pgrid = MomentumGrid{});

/// Coefficients of a state in the number basis |0>..|n_max>.
struct FockVector {
    int n_max = 0;
    std::vector<double> coeffs;
};

/// <n|x> for n = 0..n_max from
///   d_0 = pi^{-1/4} exp(-x^2/2),  d_{n+1} = (sqrt(2) x d_n - sqrt(n) d_{n-1}) / sqrt(n+1).
/// PrecisionError if x^2 > 2 n_max + 1 (x beyond the turning point of the last retained state).
FockVector fock_position_state(double x, int n_max);

/// <v|(a + a^dagger)/sqrt(2)|v> / <v|v> on the truncated vector.
double quadrature_expectation(const FockVector& v);

/// max_{n < n_max} |((a + a^dagger)/sqrt(2) v)_n - x v_n| / max |v_n|: the eigen-relation away from truncation.
double quadrature_residual(const FockVector& v, double x);

/// sum a_n b_n. DomainError on mismatched truncation.
double overlap(const FockVector& a, const FockVector& b);

}  // namespace airybasis
