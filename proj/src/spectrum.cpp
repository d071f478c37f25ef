#include "airybasis/spectrum.hpp"

#include <charconv>
#include <cmath>

#include "airybasis/airy.hpp"
#include "airybasis/errors.hpp"

namespace airybasis {
namespace {

constexpr double kBoundaryThreshold = 1e-8;

void require_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw DomainError("spectrum: lambda must be positive");
}

void require_index(int n) {
    if (n < 0) throw DomainError("spectrum: state index must be non-negative");
}

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

struct RawState {
    double energy;
    double normalization;
    std::vector<double> values;
};

// Evaluates on the left half and mirrors, so parity is exact and sgn(0) = 0 at the centre.
RawState compute_state(int n, double lambda, const Grid& grid) {
    require_index(n);
    require_lambda(lambda);
    if (!grid.is_symmetric()) throw DomainError("eigenfunction: grid must be symmetric about 0");

    const double energy = level_energy(n, lambda);
    const double scale = std::cbrt(2.0 * lambda);
    const double turning = energy / lambda;
    const bool odd = n % 2 == 1;
    const std::size_t size = grid.size();
    std::vector<double> values(size);
    for (std::size_t i = 0; i <= (size - 1) / 2; ++i) {
        const std::size_t mirror = size - 1 - i;
        double v = 0.0;
        if (i == mirror) {
            v = odd ? 0.0 : airy_ai(-scale * turning).value;
        } else {
            const double abs_x = -grid.point(i);
            v = airy_ai(scale * (abs_x - turning)).value;
        }
        values[mirror] = v;
        values[i] = odd ? -v : v;
    }
    std::vector<double> squares(size);
    for (std::size_t i = 0; i < size; ++i) squares[i] = values[i] * values[i];
    const double normalization = 1.0 / std::sqrt(integrate(grid, squares));
    for (auto& v : values) v *= normalization;
    if (std::fabs(values.front()) >= kBoundaryThreshold || std::fabs(values.back()) >= kBoundaryThreshold) {
        throw PrecisionError("eigenfunction: grid too narrow for state " + std::to_string(n) +
                             " (boundary value " + format_number(std::fabs(values.back())) + ")");
    }
    return {energy, normalization, std::move(values)};
}

std::string make_tag(double lambda, std::size_t n_states, const Grid& grid) {
    return "lambda=" + format_number(lambda) + ";n=" + std::to_string(n_states) + ";grid=" +
           format_number(grid.x_min()) + ":" + format_number(grid.x_max()) + ":" + std::to_string(grid.size());
}

WaveFunction to_wavefunction(const Grid& grid, std::span<const double> values) {
    return WaveFunction(grid, std::vector<Complex>(values.begin(), values.end()));
}

}  // namespace

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

double even_energy(int n, double lambda) {
    require_index(n);
    require_lambda(lambda);
    return -std::cbrt(lambda * lambda / 2.0) * airy_prime_zero(n + 1);
}

double odd_energy(int n, double lambda) {
    require_index(n);
    require_lambda(lambda);
    return -std::cbrt(lambda * lambda / 2.0) * airy_zero(n + 1);
}

double level_energy(int n, double lambda) {
    require_index(n);
    return n % 2 == 0 ? even_energy(n / 2, lambda) : odd_energy(n / 2, lambda);
}

double min_half_width(double lambda, int n_states) {
    require_lambda(lambda);
    if (n_states < 1) throw DomainError("min_half_width: need at least one state");
    return level_energy(n_states - 1, lambda) / lambda + 8.0 / std::cbrt(2.0 * lambda);
}

EigenState eigenfunction(int n, double lambda, const Grid& grid) {
    auto raw = compute_state(n, lambda, grid);
    return EigenState{n, raw.energy, n % 2 == 0 ? Parity::even : Parity::odd, raw.normalization,
                      to_wavefunction(grid, raw.values)};
}

SpectralBasis::SpectralBasis(double lambda, Grid grid, std::vector<EigenState> states)
    : lambda_(lambda), grid_(grid) {
    require_lambda(lambda);
    const std::size_t n_points = grid.size();
    samples_.reserve(states.size() * n_points);
    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto& s = states[k];
        if (s.n != static_cast<int>(k)) throw DomainError("SpectralBasis: states must be ordered n = 0..N-1");
        if (!(s.samples.grid() == grid)) throw DomainError("SpectralBasis: state on a different grid");
        if (k > 0 && !(s.energy > energies_.back())) throw DomainError("SpectralBasis: energies must increase");
        energies_.push_back(s.energy);
        normalizations_.push_back(s.normalization);
        for (const auto& v : s.samples.samples()) samples_.push_back(v.real());
    }
    tag_ = make_tag(lambda, states.size(), grid);
}

std::span<const double> SpectralBasis::values(std::size_t n) const {
    if (n >= size()) throw DomainError("SpectralBasis: state index out of range");
    return std::span<const double>(samples_).subspan(n * grid_.size(), grid_.size());
}

EigenState SpectralBasis::state(std::size_t n) const {
    return EigenState{static_cast<int>(n), energy(n), parity(n), normalization(n), wavefunction(n)};
}

WaveFunction SpectralBasis::wavefunction(std::size_t n) const { return to_wavefunction(grid_, values(n)); }

SpectralBasis SpectralBasis::with_scaled_energies(double rel) const {
    SpectralBasis copy = *this;
    for (auto& e : copy.energies_) e *= 1.0 + rel;
    copy.tag_ += ";energy_scale=" + format_number(1.0 + rel);
    return copy;
}

SpectralBasis build_basis(double lambda, int n_states, const Grid& grid) {
    require_lambda(lambda);
    if (n_states < 1) throw DomainError("build_basis: need at least one state");
    if (!grid.is_symmetric()) throw DomainError("build_basis: grid must be symmetric about 0");
    const double needed = min_half_width(lambda, n_states);
    if (grid.x_max() < needed) {
        throw PrecisionError("build_basis: grid half-width " + format_number(grid.x_max()) + " below required " +
                             format_number(needed) + " for " + std::to_string(n_states) + " states");
    }
    SpectralBasis basis;
    basis.lambda_ = lambda;
    basis.grid_ = grid;
    basis.samples_.reserve(static_cast<std::size_t>(n_states) * grid.size());
    for (int n = 0; n < n_states; ++n) {
        auto raw = compute_state(n, lambda, grid);
        basis.energies_.push_back(raw.energy);
        basis.normalizations_.push_back(raw.normalization);
        basis.samples_.insert(basis.samples_.end(), raw.values.begin(), raw.values.end());
    }
    basis.tag_ = make_tag(lambda, static_cast<std::size_t>(n_states), grid);
    return basis;
}

std::vector<Complex> hamiltonian_residual(const WaveFunction& psi, double lambda, double energy) {
    auto r = second_derivative(psi);
    for (std::size_t i = 2; i + 2 < psi.size(); ++i) {
        r[i] = -0.5 * r[i] + (lambda * std::fabs(psi.grid().point(i)) - energy) * psi[i];
    }
    return r;
}

}  // namespace airybasis
