#pragma once

#include <span>
#include <vector>

#include "airybasis/dynamics.hpp"
#include "airybasis/quadrature.hpp"
#include "airybasis/spectrum.hpp"

namespace airybasis {

/// Symmetric linear graded-index medium: kappa = k n0, 2 lambda = k^2 n0^2 alpha.
struct GrinMedium {
    double kappa = 1.0;
    double lambda = 0.1;
};

struct WaveletParams {
    double q = -1.472910;
};

/// sqrt(C) Ai(x+q) Ai(-x+q) with C fixed by quadrature for unit norm.
/// Symmetric grid required; PrecisionError if |E| >= 1e-8 at the ends.
WaveFunction airy_wavelet(const WaveletParams& p, const Grid& grid);

/// E(x,z) = exp(-i kappa z) sum c_n exp(+i (z/kappa) E_n) psi_n(x).
/// DomainError if the basis was built with a different lambda.
WaveFunction propagate_grin(const WaveFunction& field0, const GrinMedium& medium, const SpectralBasis& basis,
                            double z);

/// Row-major z_samples.size() x grid.size() matrix of |E(x,z)|^2.
struct IntensityMap {
    std::vector<double> z;
    Grid grid;
    std::vector<double> values;

    std::span<const double> row(std::size_t k) const;
};

/// The global phase is dropped; it cancels in |E|^2.
IntensityMap intensity_map(const WaveFunction& field0, const GrinMedium& medium, const SpectralBasis& basis,
                           std::span<const double> z_samples);

/// int x^2 |E(x,z)|^2 dx / int |E(x,z)|^2 dx per z, through the moment matrices of the basis.
std::vector<double> second_moment_trace(const WaveFunction& field0, const GrinMedium& medium,
                                        const SpectralBasis& basis, std::span<const double> z_samples);

/// |E(0,z)|^2 per z.
std::vector<double> on_axis_intensity(const WaveFunction& field0, const GrinMedium& medium,
                                      const SpectralBasis& basis, std::span<const double> z_samples);

/// max |I(x) - I(-x)| over a row on a symmetric grid.
double mirror_asymmetry(std::span<const double> row, const Grid& grid);

}  // namespace airybasis
