#pragma once

#include <span>
#include <string>
#include <vector>

#include "airybasis/quadrature.hpp"
#include "airybasis/spectrum.hpp"

namespace airybasis {

/// Expansion coefficients of a state in a particular SpectralBasis.
struct SpectralCoefficients {
    std::string basis_tag;
    std::vector<Complex> c;

    /// sum |c_n|^2
    double captured_weight() const;
};

struct GaussianPacketParams {
    double x0 = 10.0;
    double sigma = 2.0;
};

/// (2/(pi sigma^2))^{1/4} exp(-(x-x0)^2/sigma^2)
double gaussian_packet_value(const GaussianPacketParams& p, double x);

/// Unit-norm Gaussian sampled on the grid; PrecisionError if clipped (|value| >= 1e-12 at an end).
WaveFunction gaussian_packet(const GaussianPacketParams& p, const Grid& grid);

/// c_n = int phi psi_n dx (psi_n real).
SpectralCoefficients project(const WaveFunction& phi, const SpectralBasis& basis);

/// phi(x,t) = sum c_n exp(-i t E_n) psi_n(x).
WaveFunction evolve(const SpectralCoefficients& coeffs, const SpectralBasis& basis, double t);

/// int x |phi|^2 dx. Renormalizes when | ||phi||^2 - 1 | < 1e-6, throws DomainError otherwise.
double mean_position(const WaveFunction& phi);

struct TrajectoryPoint {
    double t = 0.0;
    double mean_x = 0.0;
};

/// mean_position(evolve(project(packet), basis, t)) for each t.
///
/// Evaluated through the position and Gram matrices of the significant basis states, which
/// gives the same quadrature sum as reconstructing phi(x,t) sample by sample.
std::vector<TrajectoryPoint> trajectory(const GaussianPacketParams& p, const SpectralBasis& basis,
                                        std::span<const double> times);

/// sum |c_n|^2 E_n / sum |c_n|^2
double spectral_energy(const SpectralCoefficients& coeffs, const SpectralBasis& basis);

/// <phi|H|phi>/<phi|phi> with H = p^2/2 + lambda |x| by a five-point stencil.
double energy_expectation(const WaveFunction& phi, double lambda);

/// <phi(0)|phi(t)> / <phi(0)|phi(0)> = sum |c_n|^2 exp(-i E_n t) / sum |c_n|^2.
Complex autocorrelation(const SpectralCoefficients& coeffs, const SpectralBasis& basis, double t);

/// Times at which d<x>/dt changes sign (linear interpolation of the finite difference), with <x> there.
std::vector<TrajectoryPoint> turning_points(std::span<const TrajectoryPoint> traj);

struct EnvelopeSample {
    double t_start = 0.0;
    double amplitude = 0.0;  // (max - min)/2 of <x> over the window
};

/// Half-range of <x> over windows [t, t+window), started every window/2.
std::vector<EnvelopeSample> oscillation_envelope(std::span<const TrajectoryPoint> traj, double window);

struct CollapseRevivalReport {
    int initial_bounces = 0;
    double initial_amplitude = 0.0;
    double collapse_time = -1.0;
    double collapse_amplitude = 0.0;
    double revival_time = -1.0;
    double revival_amplitude = 0.0;
    bool bounces_ok = false;
    bool collapse_ok = false;
    bool revival_ok = false;
};

/// Counts initial bounces (turning points with |<x>| > bounce_fraction * x0 before the envelope first
/// drops below collapse_fraction * A0), then looks for a collapse window (< collapse_fraction * A0)
/// followed by a revival window (> revival_fraction * A0).
CollapseRevivalReport analyze_collapse_revival(std::span<const TrajectoryPoint> traj, double x0, double window,
                                               double bounce_fraction = 0.1, double collapse_fraction = 0.3,
                                               double revival_fraction = 0.6);

/// Classical period 4 sqrt(2 x0 / lambda) of a particle released at rest from x0 in lambda |x|.
double classical_period(double x0, double lambda);

}  // namespace airybasis
