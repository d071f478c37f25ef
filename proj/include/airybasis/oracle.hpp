#pragma once

#include <cstddef>
#include <vector>

#include "airybasis/quadrature.hpp"

namespace airybasis {

/// Symmetric tridiagonal matrix on a grid; off_diagonal[i] couples points i and i+1.
struct TridiagonalOperator {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;
    Grid grid;
};

/// Three-point discretization of p^2/2 + lambda |x| with Dirichlet ends:
/// diagonal 1/h^2 + lambda |x_i|, off-diagonal -1/(2 h^2).
TridiagonalOperator build_hamiltonian(double lambda, const Grid& grid);

/// All eigenvalues, ascending, by implicit-shift QL. ConvergenceError past the iteration cap.
std::vector<double> tridiagonal_eigenvalues(const TridiagonalOperator& op);

struct OracleState {
    double energy = 0.0;
    WaveFunction vector;
};

/// Lowest n_lowest eigenpairs. Vectors come from inverse iteration, are normalized with
/// sum |v|^2 h = 1 and signed so the right-hand tail is positive.
std::vector<OracleState> diagonalize(const TridiagonalOperator& op, int n_lowest);

struct ConvergenceStudy {
    std::vector<std::size_t> n_points;
    std::vector<double> spacing;
    /// errors[k][n] = |E_n(grid k) - reference[n]|
    std::vector<std::vector<double>> errors;
    /// orders[k][n] = log2(errors[k][n] / errors[k+1][n]) between successive halvings.
    std::vector<std::vector<double>> orders;
};

/// Oracle energies against `reference` on [x_min, x_max] for each point count (successive halvings of h).
ConvergenceStudy convergence_study(double lambda, double x_min, double x_max,
                                   const std::vector<std::size_t>& n_points, const std::vector<double>& reference);

}  // namespace airybasis
