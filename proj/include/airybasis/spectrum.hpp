#pragma once

#include <span>
#include <string>
#include <vector>

#include "airybasis/quadrature.hpp"

namespace airybasis {

enum class Parity { even, odd };

const char* to_string(Parity p);

/// Normalized eigenstate of H = p^2/2 + lambda |x|.
struct EigenState {
    int n = 0;
    double energy = 0.0;
    Parity parity = Parity::even;
    double normalization = 0.0;  // N_n > 0
    WaveFunction samples;
};

/// E_{2n} = -(lambda^2/2)^{1/3} a'_{n+1}.
double even_energy(int n, double lambda);

/// E_{2n+1} = -(lambda^2/2)^{1/3} a_{n+1}.
double odd_energy(int n, double lambda);

/// Energy of the n-th state in the combined (alternating parity) ordering.
double level_energy(int n, double lambda);

/// Smallest x_max accepted by build_basis: E_{N-1}/lambda + 8 (2 lambda)^{-1/3}.
double min_half_width(double lambda, int n_states);

/// State n on a symmetric grid:
///   even n: N Ai((2 lambda)^{1/3}(|x| - E/lambda))
///   odd n:  N sgn(x) Ai((2 lambda)^{1/3}(|x| - E/lambda))
/// with N > 0 fixed by Simpson quadrature. Samples are mirrored so parity holds exactly.
/// Throws PrecisionError if |psi| >= 1e-8 at the grid ends.
EigenState eigenfunction(int n, double lambda, const Grid& grid);

/// First N eigenstates on a shared grid. Real samples are stored contiguously.
class SpectralBasis {
public:
    SpectralBasis(double lambda, Grid grid, std::vector<EigenState> states);

    double lambda() const { return lambda_; }
    const Grid& grid() const { return grid_; }
    std::size_t size() const { return energies_.size(); }
    const std::string& tag() const { return tag_; }

    double energy(std::size_t n) const { return energies_[n]; }
    std::span<const double> energies() const { return energies_; }
    Parity parity(std::size_t n) const { return n % 2 == 0 ? Parity::even : Parity::odd; }
    double normalization(std::size_t n) const { return normalizations_[n]; }

    /// Real samples of state n.
    std::span<const double> values(std::size_t n) const;
    /// Row-major size() x grid().size() sample matrix.
    std::span<const double> matrix() const { return samples_; }

    EigenState state(std::size_t n) const;
    WaveFunction wavefunction(std::size_t n) const;

    /// Copy whose energies are multiplied by (1 + rel); eigenfunctions untouched. Used for fault injection.
    SpectralBasis with_scaled_energies(double rel) const;

private:
    friend SpectralBasis build_basis(double lambda, int n_states, const Grid& grid);
    SpectralBasis() = default;

    double lambda_ = 0.0;
    Grid grid_{0.0, 1.0, 2};
    std::vector<double> energies_;
    std::vector<double> normalizations_;
    std::vector<double> samples_;
    std::string tag_;
};

/// Throws PrecisionError if the grid violates min_half_width or any state fails the boundary check.
SpectralBasis build_basis(double lambda, int n_states, const Grid& grid);

/// -psi''/2 + lambda |x| psi - E psi (five-point stencil, interior only).
std::vector<Complex> hamiltonian_residual(const WaveFunction& psi, double lambda, double energy);

}  // namespace airybasis
