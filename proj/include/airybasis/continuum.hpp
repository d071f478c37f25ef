#pragma once

#include <functional>
#include <vector>

#include "airybasis/quadrature.hpp"

namespace airybasis {

/// One-sided linear potential V(x) = |k| x with continuum energy E.
struct LinearPotentialParams {
    double k_abs = 0.5;
    double energy = 0.0;
};

/// Displacement eigenvalue gamma of the state Ai(x - gamma).
struct DisplacedAiryParams {
    double gamma = 0.0;
};

/// Squeeze r and real displacement alpha acting on position-space profiles:
/// S(r): f(x) -> e^{r/2} f(e^r x),   D(alpha): f(x) -> f(x - sqrt(2) alpha).
struct SqueezeDisplaceParams {
    double r = 0.0;
    double alpha = 0.0;

    /// r = ln (2|k|)^{1/3}, alpha = E / (sqrt(2)|k|).
    static SqueezeDisplaceParams for_potential(const LinearPotentialParams& p);

    /// Parameters whose D S undoes this D S.
    SqueezeDisplaceParams inverse() const;
};

using Profile = std::function<Complex(double)>;

/// (2|k|)^{1/6} Ai((2|k|)^{1/3} (x - E/|k|)) on the grid.
WaveFunction psi_E(const LinearPotentialParams& params, const Grid& grid);

/// x -> e^{r/2} f(e^r (x - sqrt(2) alpha)), i.e. D(alpha) S(r) f.
Profile apply_displaced_squeeze(Profile f, const SqueezeDisplaceParams& p);

/// Ai(x - gamma) on the grid.
WaveFunction displaced_airy(const DisplacedAiryParams& params, const Grid& grid);

/// E' = ((2|k|)^{2/3} / 2) gamma + E.
double shifted_energy(double energy, double k_abs, double gamma);

/// output(x) = input(-x). Requires a symmetric grid.
WaveFunction parity_reflect(const WaveFunction& f);

/// g(x) = int dgamma Ai(x - gamma) int dy Ai(y - gamma) f(y); approximates f when both
/// windows cover the relevant support.
WaveFunction completeness_smear(const WaveFunction& f, const Grid& gamma_grid);

/// (p^2 + x - gamma) psi with p^2 = -d^2/dx^2 (five-point stencil, interior only).
std::vector<Complex> airy_operator_residual(const WaveFunction& psi, double gamma);

/// -psi''/2 + slope * x * psi - E psi (interior only). Slope may be negative.
std::vector<Complex> linear_potential_residual(const WaveFunction& psi, double slope, double energy);

}  // namespace airybasis
