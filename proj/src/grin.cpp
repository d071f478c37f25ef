#include "airybasis/grin.hpp"

#include <cmath>

#include "airybasis/airy.hpp"
#include "airybasis/errors.hpp"
#include "basis_ops.hpp"

namespace airybasis {
namespace {

constexpr double kTailThreshold = 1e-8;

void require_compatible(const GrinMedium& medium, const SpectralBasis& basis) {
    if (!(medium.kappa > 0.0) || !(medium.lambda > 0.0)) throw DomainError("grin: kappa and lambda must be positive");
    if (std::fabs(medium.lambda - basis.lambda()) > 1e-14 * medium.lambda) {
        throw DomainError("grin: basis lambda does not match the medium");
    }
}

struct Reduced {
    std::vector<std::size_t> idx;
    std::vector<Complex> c;
    std::vector<double> energies;
};

// Coefficients restricted to significant states. Energies are divided by kappa so z plays the role of time.
Reduced reduce(const WaveFunction& field0, const GrinMedium& medium, const SpectralBasis& basis) {
    require_compatible(medium, basis);
    const auto coeffs = project(field0, basis);
    Reduced r;
    r.idx = detail::significant_indices(coeffs.c);
    for (auto n : r.idx) {
        r.c.push_back(coeffs.c[n]);
        r.energies.push_back(basis.energy(n) / medium.kappa);
    }
    return r;
}

}  // namespace

WaveFunction airy_wavelet(const WaveletParams& p, const Grid& grid) {
    if (!std::isfinite(p.q)) throw DomainError("airy_wavelet: q must be finite");
    if (!grid.is_symmetric()) throw DomainError("airy_wavelet: grid must be symmetric about 0");
    const std::size_t size = grid.size();
    std::vector<double> values(size);
    for (std::size_t i = 0; i <= (size - 1) / 2; ++i) {
        const double x = grid.point(i);
        const double v = i == size - 1 - i ? airy_ai(p.q).value * airy_ai(p.q).value
                                           : airy_ai(x + p.q).value * airy_ai(-x + p.q).value;
        values[i] = v;
        values[size - 1 - i] = v;
    }
    std::vector<double> squares(size);
    for (std::size_t i = 0; i < size; ++i) squares[i] = values[i] * values[i];
    const double scale = 1.0 / std::sqrt(integrate(grid, squares));
    std::vector<Complex> samples(size);
    for (std::size_t i = 0; i < size; ++i) samples[i] = Complex(scale * values[i], 0.0);
    if (std::abs(samples.front()) >= kTailThreshold) throw PrecisionError("airy_wavelet: field does not decay on the grid");
    return WaveFunction(grid, std::move(samples));
}

WaveFunction propagate_grin(const WaveFunction& field0, const GrinMedium& medium, const SpectralBasis& basis,
                            double z) {
    require_compatible(medium, basis);
    const auto coeffs = project(field0, basis);
    const auto field = evolve(coeffs, basis, -z / medium.kappa);
    return scaled(field, std::polar(1.0, -medium.kappa * z));
}

std::span<const double> IntensityMap::row(std::size_t k) const {
    if (k >= z.size()) throw DomainError("IntensityMap: row out of range");
    return std::span<const double>(values).subspan(k * grid.size(), grid.size());
}

IntensityMap intensity_map(const WaveFunction& field0, const GrinMedium& medium, const SpectralBasis& basis,
                           std::span<const double> z_samples) {
    const auto r = reduce(field0, medium, basis);
    const auto rows = detail::gather_rows(basis, r.idx);
    const std::size_t n_points = basis.grid().size();
    const auto k = static_cast<Eigen::Index>(r.idx.size());

    IntensityMap out{std::vector<double>(z_samples.begin(), z_samples.end()), basis.grid(),
                     std::vector<double>(z_samples.size() * n_points)};
    constexpr std::size_t kBlock = 16;
    for (std::size_t start = 0; start < z_samples.size(); start += kBlock) {
        const auto b = static_cast<Eigen::Index>(std::min(kBlock, z_samples.size() - start));
        detail::RowMatrix ar(b, k), ai(b, k);
        for (Eigen::Index row = 0; row < b; ++row) {
            const double z = z_samples[start + static_cast<std::size_t>(row)];
            for (Eigen::Index j = 0; j < k; ++j) {
                const auto jj = static_cast<std::size_t>(j);
                const Complex a = r.c[jj] * std::polar(1.0, r.energies[jj] * z);
                ar(row, j) = a.real();
                ai(row, j) = a.imag();
            }
        }
        const detail::RowMatrix re = ar * rows;
        const detail::RowMatrix im = ai * rows;
        detail::RowMatrix::MapType dest(out.values.data() + start * n_points, b,
                                        static_cast<Eigen::Index>(n_points));
        dest = re.array().square() + im.array().square();
    }
    return out;
}

std::vector<double> second_moment_trace(const WaveFunction& field0, const GrinMedium& medium,
                                        const SpectralBasis& basis, std::span<const double> z_samples) {
    const auto r = reduce(field0, medium, basis);
    const auto rows = detail::gather_rows(basis, r.idx);
    const Grid& grid = basis.grid();
    const auto w = quadrature_weights(grid);
    std::vector<double> wx2(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) wx2[i] = w[i] * grid.point(i) * grid.point(i);
    const Eigen::MatrixXd gram = detail::weighted_gram(rows, detail::to_eigen(w));
    const Eigen::MatrixXd moment = detail::weighted_gram(rows, detail::to_eigen(wx2));
    const auto num = detail::quadratic_form_ratio(r.c, r.energies, moment, gram, z_samples, 1.0, false);
    const auto den = detail::quadratic_form_ratio(r.c, r.energies, gram, gram, z_samples, 1.0, false);
    std::vector<double> out(z_samples.size());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = num[k] / den[k];
    return out;
}

std::vector<double> on_axis_intensity(const WaveFunction& field0, const GrinMedium& medium,
                                      const SpectralBasis& basis, std::span<const double> z_samples) {
    const auto r = reduce(field0, medium, basis);
    const Grid& grid = basis.grid();
    if (!grid.is_symmetric() || grid.size() % 2 == 0) throw DomainError("on_axis_intensity: grid must contain x = 0");
    const std::size_t centre = grid.size() / 2;
    std::vector<double> axis(r.idx.size());
    for (std::size_t j = 0; j < r.idx.size(); ++j) axis[j] = basis.values(r.idx[j])[centre];
    std::vector<double> out(z_samples.size());
    for (std::size_t k = 0; k < z_samples.size(); ++k) {
        Complex sum{};
        for (std::size_t j = 0; j < axis.size(); ++j) sum += r.c[j] * std::polar(1.0, r.energies[j] * z_samples[k]) * axis[j];
        out[k] = std::norm(sum);
    }
    return out;
}

double mirror_asymmetry(std::span<const double> row, const Grid& grid) {
    if (!grid.is_symmetric()) throw DomainError("mirror_asymmetry: grid must be symmetric about 0");
    if (row.size() != grid.size()) throw DomainError("mirror_asymmetry: row length does not match grid");
    double worst = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) worst = std::max(worst, std::fabs(row[i] - row[row.size() - 1 - i]));
    return worst;
}

}  // namespace airybasis
