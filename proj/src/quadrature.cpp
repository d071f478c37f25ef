#include "airybasis/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "airybasis/errors.hpp"

namespace airybasis {

Grid::Grid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_points_(n_points), spacing_(0.0) {
    if (!std::isfinite(x_min) || !std::isfinite(x_max)) throw DomainError("Grid: bounds must be finite");
    if (!(x_min < x_max)) throw DomainError("Grid: x_min must be less than x_max");
    if (n_points < 2) throw DomainError("Grid: at least 2 points required");
    spacing_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::points() const {
    std::vector<double> xs(n_points_);
    for (std::size_t i = 0; i < n_points_; ++i) xs[i] = point(i);
    return xs;
}

bool Grid::is_symmetric() const {
    return std::fabs(x_min_ + x_max_) <= 1e-12 * std::max(1.0, std::fabs(x_max_));
}

Grid make_grid(double x_min, double x_max, std::size_t n_points) { return Grid(x_min, x_max, n_points); }

WaveFunction::WaveFunction(Grid grid, std::vector<Complex> samples)
    : grid_(grid), samples_(std::move(samples)) {
    if (samples_.size() != grid_.size()) throw DomainError("WaveFunction: sample count does not match grid");
}

std::vector<double> quadrature_weights(const Grid& grid) {
    const std::size_t n = grid.size();
    const double h = grid.spacing();
    std::vector<double> w(n, h);
    const std::size_t intervals = n - 1;
    if (intervals % 2 == 0) {
        for (std::size_t i = 1; i + 1 < n; ++i) w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
        w.front() = w.back() = h / 3.0;
    } else {
        w.front() = w.back() = h / 2.0;
    }
    return w;
}

Complex inner_product(const WaveFunction& f, const WaveFunction& g) {
    if (!(f.grid() == g.grid())) throw DomainError("inner_product: wavefunctions live on different grids");
    const auto w = quadrature_weights(f.grid());
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double fr = f[i].real(), fi = f[i].imag();
        const double gr = g[i].real(), gi = g[i].imag();
        re += w[i] * (fr * gr + fi * gi);
        im += w[i] * (fr * gi - fi * gr);
    }
    return {re, im};
}

double norm(const WaveFunction& f) { return std::sqrt(inner_product(f, f).real()); }

double integrate(const Grid& grid, std::span<const double> values) {
    if (values.size() != grid.size()) throw DomainError("integrate: value count does not match grid");
    const auto w = quadrature_weights(grid);
    double sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * values[i];
    return sum;
}

WaveFunction sample(const std::function<Complex(double)>& fn, const Grid& grid) {
    std::vector<Complex> values(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) values[i] = fn(grid.point(i));
    return WaveFunction(grid, std::move(values));
}

WaveFunction scaled(const WaveFunction& f, Complex factor) {
    std::vector<Complex> values(f.samples().begin(), f.samples().end());
    for (auto& v : values) v *= factor;
    return WaveFunction(f.grid(), std::move(values));
}

WaveFunction combine(Complex a, const WaveFunction& f, Complex b, const WaveFunction& g) {
    if (!(f.grid() == g.grid())) throw DomainError("combine: wavefunctions live on different grids");
    std::vector<Complex> values(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) values[i] = a * f[i] + b * g[i];
    return WaveFunction(f.grid(), std::move(values));
}

std::vector<Complex> second_derivative(const WaveFunction& f) {
    const std::size_t n = f.size();
    std::vector<Complex> d2(n, Complex{});
    if (n < 5) return d2;
    const double inv = 1.0 / (12.0 * f.grid().spacing() * f.grid().spacing());
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d2[i] = (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]) * inv;
    }
    return d2;
}

double relative_interior_norm(std::span<const Complex> residual, const WaveFunction& f) {
    if (residual.size() != f.size()) throw DomainError("relative_interior_norm: size mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 2; i + 2 < f.size(); ++i) {
        num += std::norm(residual[i]);
        den += std::norm(f[i]);
    }
    if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
    return std::sqrt(num / den);
}

double max_interior_abs(std::span<const Complex> residual) {
    double m = 0.0;
    for (std::size_t i = 2; i + 2 < residual.size(); ++i) m = std::max(m, std::abs(residual[i]));
    return m;
}

}  // namespace airybasis
