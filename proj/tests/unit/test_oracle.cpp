#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "airy_oracle.hpp"
#include "airybasis/errors.hpp"
#include "airybasis/oracle.hpp"
#include "airybasis/spectrum.hpp"

using namespace airybasis;

namespace {

const Grid kGrid(-40.0, 40.0, 8001);

double grid_dot(const WaveFunction& a, const WaveFunction& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (std::conj(a[i]) * b[i]).real();
    return s * a.grid().spacing();
}

double reference_energy(int n) {
    const int k = n / 2 + 1;
    return -std::cbrt(0.5) * (n % 2 == 0 ? oracle::ai_prime_zero(k) : oracle::ai_zero(k));
}

}  // namespace

TEST_CASE("three-point stencil on {-1, 0, 1}") {
    const auto op = build_hamiltonian(1.0, Grid(-1.0, 1.0, 3));
    CHECK(op.diagonal == std::vector<double>{2.0, 1.0, 2.0});
    CHECK(op.off_diagonal == std::vector<double>{-0.5, -0.5});
    const auto other = build_hamiltonian(7.0, Grid(-1.0, 1.0, 3));
    CHECK(other.diagonal[1] == 1.0);
}

TEST_CASE("operator is symmetric about the origin") {
    const auto op = build_hamiltonian(0.3, kGrid);
    REQUIRE(op.diagonal.size() == kGrid.size());
    REQUIRE(op.off_diagonal.size() == kGrid.size() - 1);
    for (std::size_t i = 0; i < op.diagonal.size(); ++i) CHECK(op.diagonal[i] == op.diagonal[op.diagonal.size() - 1 - i]);
}

TEST_CASE("free particle in a box has the closed-form spectrum") {
    // Tridiagonal Toeplitz: 1/h^2 - (1/h^2) cos(k pi / (M+1)), k = 1..M, with M interior points.
    const std::size_t m = 200;
    const Grid grid(-1.0, 1.0, m);
    TridiagonalOperator op{std::vector<double>(m, 0.0), std::vector<double>(m - 1, 0.0), grid};
    const double h = grid.spacing();
    for (auto& d : op.diagonal) d = 1.0 / (h * h);
    for (auto& e : op.off_diagonal) e = -0.5 / (h * h);
    const auto energies = tridiagonal_eigenvalues(op);
    for (std::size_t k = 1; k <= m; ++k) {
        const double exact = (1.0 - std::cos(k * std::numbers::pi / (m + 1.0))) / (h * h);
        CHECK(energies[k - 1] == doctest::Approx(exact).epsilon(1e-10).scale(1.0 / (h * h)));
    }
}

TEST_CASE("eigenvalues are sorted ascending") {
    const auto energies = tridiagonal_eigenvalues(build_hamiltonian(1.0, Grid(-20.0, 20.0, 1001)));
    CHECK(std::is_sorted(energies.begin(), energies.end()));
    CHECK(energies.size() == 1001);
}

TEST_CASE("lowest six levels match the zero-based energies") {
    const auto states = diagonalize(build_hamiltonian(1.0, kGrid), 6);
    REQUIRE(states.size() == 6);
    const std::vector<double> tabulated = {0.808616, 1.855757, 2.578096, 3.244607, 3.825715, 4.381671};
    for (int n = 0; n < 6; ++n) {
        CAPTURE(n);
        CHECK(std::fabs(states[static_cast<std::size_t>(n)].energy - reference_energy(n)) <= 1e-4);
        CHECK(std::fabs(states[static_cast<std::size_t>(n)].energy - tabulated[static_cast<std::size_t>(n)]) <= 1e-4);
    }
}

TEST_CASE("eigenvectors agree with the Airy eigenfunctions and carry the same sign") {
    const auto states = diagonalize(build_hamiltonian(1.0, kGrid), 6);
    for (int n = 0; n < 6; ++n) {
        const auto exact = eigenfunction(n, 1.0, kGrid);
        const double ov = grid_dot(states[static_cast<std::size_t>(n)].vector, exact.samples);
        CAPTURE(n);
        CHECK(ov >= 1.0 - 1e-6);
    }
}

TEST_CASE("eigenvectors are normalized and mutually orthogonal") {
    const auto states = diagonalize(build_hamiltonian(1.0, kGrid), 8);
    for (std::size_t a = 0; a < states.size(); ++a) {
        for (std::size_t b = a; b < states.size(); ++b) {
            CHECK(std::fabs(grid_dot(states[a].vector, states[b].vector) - (a == b ? 1.0 : 0.0)) <= 1e-8);
        }
    }
}

TEST_CASE("halving the spacing quarters the error") {
    std::vector<double> reference;
    for (int n = 0; n < 6; ++n) reference.push_back(reference_energy(n));
    const auto study = convergence_study(1.0, -40.0, 40.0, {1001, 2001, 4001, 8001}, reference);
    REQUIRE(study.orders.size() == 3);
    for (std::size_t k = 0; k < study.orders.size(); ++k) {
        for (std::size_t n = 0; n < 6; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(std::fabs(study.orders[k][n] - 2.0) <= 0.1);
            CHECK(study.errors[k + 1][n] < study.errors[k][n]);
        }
    }
    CHECK(study.spacing[1] == doctest::Approx(0.5 * study.spacing[0]));
}

TEST_CASE("diagonalize validates its request") {
    const auto op = build_hamiltonian(1.0, Grid(-5.0, 5.0, 51));
    CHECK_THROWS_AS(diagonalize(op, 0), DomainError);
    CHECK_THROWS_AS(diagonalize(op, 52), DomainError);
    CHECK_THROWS_AS(build_hamiltonian(0.0, kGrid), DomainError);
}
