#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace airybasis {

using Complex = std::complex<double>;

/// Uniform sampling window x_min + i*spacing, i = 0..n_points-1.
class Grid {
public:
    Grid(double x_min, double x_max, std::size_t n_points);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    std::size_t size() const { return n_points_; }
    double spacing() const { return spacing_; }
    double point(std::size_t i) const { return x_min_ + static_cast<double>(i) * spacing_; }
    std::vector<double> points() const;

    /// x_min == -x_max up to rounding.
    bool is_symmetric() const;

    friend bool operator==(const Grid&, const Grid&) = default;

private:
    double x_min_;
    double x_max_;
    std::size_t n_points_;
    double spacing_;
};

Grid make_grid(double x_min, double x_max, std::size_t n_points);

/// Complex samples on a Grid. Immutable once built.
class WaveFunction {
public:
    WaveFunction(Grid grid, std::vector<Complex> samples);

    const Grid& grid() const { return grid_; }
    std::span<const Complex> samples() const { return samples_; }
    const Complex& operator[](std::size_t i) const { return samples_[i]; }
    std::size_t size() const { return samples_.size(); }

private:
    Grid grid_;
    std::vector<Complex> samples_;
};

/// Composite Simpson weights when the interval count is even, trapezoid weights otherwise.
std::vector<double> quadrature_weights(const Grid& grid);

/// Integral of conj(f) g over the shared grid. Throws DomainError on mismatched grids.
Complex inner_product(const WaveFunction& f, const WaveFunction& g);

/// sqrt(<f|f>).
double norm(const WaveFunction& f);

/// Integral of a real sampled function on the grid.
double integrate(const Grid& grid, std::span<const double> values);

WaveFunction sample(const std::function<Complex(double)>& fn, const Grid& grid);

WaveFunction scaled(const WaveFunction& f, Complex factor);

/// a*f + b*g on a shared grid.
WaveFunction combine(Complex a, const WaveFunction& f, Complex b, const WaveFunction& g);

/// Five-point second derivative. The two boundary samples on each side are left at zero.
std::vector<Complex> second_derivative(const WaveFunction& f);

/// sqrt(sum |r_i|^2 / sum |f_i|^2) over interior points (two excluded per side).
double relative_interior_norm(std::span<const Complex> residual, const WaveFunction& f);

/// max |r_i| over interior points.
double max_interior_abs(std::span<const Complex> residual);

}  // namespace airybasis
