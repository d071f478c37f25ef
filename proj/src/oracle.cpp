#include "airybasis/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "airybasis/errors.hpp"

namespace airybasis {
namespace {

constexpr int kMaxQlIterations = 60;
constexpr int kInverseIterations = 3;

// Solves (T - shift) y = rhs with partial pivoting; T given by its diagonal and off-diagonal.
std::vector<double> shifted_solve(const TridiagonalOperator& op, double shift, std::vector<double> rhs) {
    const std::size_t n = op.diagonal.size();
    // Row i of U holds u0[i] on the diagonal and u1[i], u2[i] on the two super-diagonals (fill-in from pivoting).
    std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0);
    double diag = op.diagonal[0] - shift;
    double sup = n > 1 ? op.off_diagonal[0] : 0.0;
    const double tiny = std::numeric_limits<double>::epsilon() *
                        std::max(1.0, std::fabs(op.diagonal[0]) + (n > 1 ? std::fabs(op.off_diagonal[0]) : 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double sub = op.off_diagonal[i];
        const double next_diag = op.diagonal[i + 1] - shift;
        const double next_sup = i + 2 < n ? op.off_diagonal[i + 1] : 0.0;
        if (std::fabs(sub) > std::fabs(diag)) {
            // Swap rows i and i+1.
            const double m = diag / sub;
            u0[i] = sub;
            u1[i] = next_diag;
            u2[i] = next_sup;
            diag = sup - m * next_diag;
            sup = -m * next_sup;
            std::swap(rhs[i], rhs[i + 1]);
            rhs[i + 1] -= m * rhs[i];
        } else {
            if (diag == 0.0) diag = tiny;
            const double m = sub / diag;
            u0[i] = diag;
            u1[i] = sup;
            diag = next_diag - m * sup;
            sup = next_sup;
            rhs[i + 1] -= m * rhs[i];
        }
    }
    u0[n - 1] = diag == 0.0 ? tiny : diag;
    std::vector<double> y(n);
    for (std::size_t k = n; k-- > 0;) {
        double s = rhs[k];
        if (k + 1 < n) s -= u1[k] * y[k + 1];
        if (k + 2 < n) s -= u2[k] * y[k + 2];
        y[k] = s / u0[k];
    }
    return y;
}

void normalize_and_sign(std::vector<double>& v, double h) {
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    const double scale = 1.0 / std::sqrt(norm2 * h);
    double peak = 0.0;
    for (double x : v) peak = std::max(peak, std::fabs(x));
    double sign = 1.0;
    for (std::size_t i = v.size(); i-- > 0;) {
        if (std::fabs(v[i]) > 1e-3 * peak) {
            sign = v[i] > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    for (double& x : v) x *= sign * scale;
}

}  // namespace

TridiagonalOperator build_hamiltonian(double lambda, const Grid& grid) {
    if (!(lambda > 0.0)) throw DomainError("build_hamiltonian: lambda must be positive");
    const double h = grid.spacing();
    TridiagonalOperator op{std::vector<double>(grid.size()), std::vector<double>(grid.size() - 1, -0.5 / (h * h)),
                           grid};
    for (std::size_t i = 0; i < grid.size(); ++i) op.diagonal[i] = 1.0 / (h * h) + lambda * std::fabs(grid.point(i));
    return op;
}

std::vector<double> tridiagonal_eigenvalues(const TridiagonalOperator& op) {
    const std::size_t n = op.diagonal.size();
    std::vector<double> d = op.diagonal;
    std::vector<double> e(n, 0.0);
    std::copy(op.off_diagonal.begin(), op.off_diagonal.end(), e.begin());

    for (std::size_t l = 0; l < n; ++l) {
        int iter = 0;
        std::size_t m = l;
        do {
            for (m = l; m + 1 < n; ++m) {
                const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m == l) break;
            if (++iter > kMaxQlIterations) throw ConvergenceError("tridiagonal_eigenvalues: QL iteration did not converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool deflated = false;
            for (std::size_t i = m; i-- > l;) {
                const double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (deflated) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<OracleState> diagonalize(const TridiagonalOperator& op, int n_lowest) {
    const std::size_t n = op.diagonal.size();
    if (n_lowest < 1 || static_cast<std::size_t>(n_lowest) > n) throw DomainError("diagonalize: invalid state count");
    const auto eigenvalues = tridiagonal_eigenvalues(op);
    const double h = op.grid.spacing();

    std::vector<OracleState> out;
    for (int k = 0; k < n_lowest; ++k) {
        const double energy = eigenvalues[static_cast<std::size_t>(k)];
        const double shift = energy + 1e-10 * std::max(1.0, std::fabs(energy));
        std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
        for (std::size_t i = 0; i < n; ++i) v[i] += 1e-3 * std::sin(0.7 * static_cast<double>(i));
        for (int it = 0; it < kInverseIterations; ++it) {
            v = shifted_solve(op, shift, std::move(v));
            double norm2 = 0.0;
            for (double x : v) norm2 += x * x;
            const double inv = 1.0 / std::sqrt(norm2);
            for (double& x : v) x *= inv;
        }
        normalize_and_sign(v, h);
        std::vector<Complex> samples(v.begin(), v.end());
        out.push_back({energy, WaveFunction(op.grid, std::move(samples))});
    }
    return out;
}

ConvergenceStudy convergence_study(double lambda, double x_min, double x_max,
                                   const std::vector<std::size_t>& n_points, const std::vector<double>& reference) {
    if (n_points.size() < 2) throw DomainError("convergence_study: need at least two grids");
    ConvergenceStudy study;
    for (auto np : n_points) {
        const Grid grid(x_min, x_max, np);
        const auto energies = tridiagonal_eigenvalues(build_hamiltonian(lambda, grid));
        if (energies.size() < reference.size()) throw DomainError("convergence_study: grid too small");
        std::vector<double> err(reference.size());
        for (std::size_t k = 0; k < reference.size(); ++k) err[k] = std::fabs(energies[k] - reference[k]);
        study.n_points.push_back(np);
        study.spacing.push_back(grid.spacing());
        study.errors.push_back(std::move(err));
    }
    for (std::size_t k = 0; k + 1 < study.errors.size(); ++k) {
        std::vector<double> order(reference.size());
        for (std::size_t n = 0; n < reference.size(); ++n) {
            order[n] = std::log2(study.errors[k][n] / study.errors[k + 1][n]);
        }
        study.orders.push_back(std::move(order));
    }
    return study;
}

}  // namespace airybasis
