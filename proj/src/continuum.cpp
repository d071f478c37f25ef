#include "airybasis/continuum.hpp"

#include <cmath>
#include <numbers>

#include "airybasis/airy.hpp"
#include "airybasis/errors.hpp"

namespace airybasis {
namespace {

void require_valid(const LinearPotentialParams& p) {
    if (!(p.k_abs > 0.0) || !std::isfinite(p.k_abs)) throw DomainError("linear potential: |k| must be positive");
    if (!std::isfinite(p.energy)) throw DomainError("linear potential: energy must be finite");
}

}  // namespace

SqueezeDisplaceParams SqueezeDisplaceParams::for_potential(const LinearPotentialParams& p) {
    require_valid(p);
    return {std::log(std::cbrt(2.0 * p.k_abs)), p.energy / (std::numbers::sqrt2 * p.k_abs)};
}

SqueezeDisplaceParams SqueezeDisplaceParams::inverse() const { return {-r, -std::exp(r) * alpha}; }

WaveFunction psi_E(const LinearPotentialParams& params, const Grid& grid) {
    require_valid(params);
    const double scale = std::cbrt(2.0 * params.k_abs);
    const double prefactor = std::sqrt(scale);
    const double shift = params.energy / params.k_abs;
    return sample([&](double x) { return Complex(prefactor * airy_ai(scale * (x - shift)).value, 0.0); }, grid);
}

Profile apply_displaced_squeeze(Profile f, const SqueezeDisplaceParams& p) {
    if (!std::isfinite(p.r) || !std::isfinite(p.alpha)) throw DomainError("apply_displaced_squeeze: non-finite parameters");
    const double stretch = std::exp(p.r);
    const double amplitude = std::exp(p.r / 2.0);
    const double shift = std::numbers::sqrt2 * p.alpha;
    return [f = std::move(f), stretch, amplitude, shift](double x) { return amplitude * f(stretch * (x - shift)); };
}

WaveFunction displaced_airy(const DisplacedAiryParams& params, const Grid& grid) {
    if (!std::isfinite(params.gamma)) throw DomainError("displaced_airy: gamma must be finite");
    return sample([&](double x) { return Complex(airy_ai(x - params.gamma).value, 0.0); }, grid);
}

double shifted_energy(double energy, double k_abs, double gamma) {
    if (!(k_abs > 0.0)) throw DomainError("shifted_energy: |k| must be positive");
    return std::pow(2.0 * k_abs, 2.0 / 3.0) / 2.0 * gamma + energy;
}

WaveFunction parity_reflect(const WaveFunction& f) {
    if (!f.grid().is_symmetric()) throw DomainError("parity_reflect: grid must be symmetric about 0");
    std::vector<Complex> values(f.samples().rbegin(), f.samples().rend());
    return WaveFunction(f.grid(), std::move(values));
}

WaveFunction completeness_smear(const WaveFunction& f, const Grid& gamma_grid) {
    const Grid& grid = f.grid();
    const std::size_t nx = grid.size();
    const std::size_t ng = gamma_grid.size();
    const auto wx = quadrature_weights(grid);
    const auto wg = quadrature_weights(gamma_grid);

    std::vector<double> kernel(nx * ng);
    for (std::size_t i = 0; i < nx; ++i) {
        for (std::size_t j = 0; j < ng; ++j) kernel[i * ng + j] = airy_ai(grid.point(i) - gamma_grid.point(j)).value;
    }
    std::vector<Complex> overlap(ng, Complex{});
    for (std::size_t i = 0; i < nx; ++i) {
        const Complex weighted = wx[i] * f[i];
        for (std::size_t j = 0; j < ng; ++j) overlap[j] += kernel[i * ng + j] * weighted;
    }
    std::vector<Complex> g(nx, Complex{});
    for (std::size_t i = 0; i < nx; ++i) {
        Complex sum{};
        for (std::size_t j = 0; j < ng; ++j) sum += wg[j] * kernel[i * ng + j] * overlap[j];
        g[i] = sum;
    }
    return WaveFunction(grid, std::move(g));
}

std::vector<Complex> airy_operator_residual(const WaveFunction& psi, double gamma) {
    auto r = second_derivative(psi);
    for (std::size_t i = 2; i + 2 < psi.size(); ++i) r[i] = -r[i] + (psi.grid().point(i) - gamma) * psi[i];
    return r;
}

std::vector<Complex> linear_potential_residual(const WaveFunction& psi, double slope, double energy) {
    auto r = second_derivative(psi);
    for (std::size_t i = 2; i + 2 < psi.size(); ++i) {
        r[i] = -0.5 * r[i] + (slope * psi.grid().point(i) - energy) * psi[i];
    }
    return r;
}

}  // namespace airybasis
