#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "airy_oracle.hpp"
#include "airybasis/dynamics.hpp"
#include "airybasis/errors.hpp"
#include "airybasis/grin.hpp"
#include "airybasis/spectrum.hpp"

using namespace airybasis;

namespace {

const Grid kGrid(-50.0, 50.0, 10001);
const GrinMedium kMedium{2.0, 1.0};

const SpectralBasis& basis() {
    static const SpectralBasis b = build_basis(1.0, 120, kGrid);
    return b;
}

double row_norm(std::span<const double> row, const Grid& grid) {
    const auto w = quadrature_weights(grid);
    double s = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) s += w[i] * row[i];
    return s;
}

WaveFunction few_state_field() {
    const auto& b = basis();
    const double a = 1.0 / std::sqrt(3.0);
    return combine(a, combine(1.0, b.wavefunction(0), 1.0, b.wavefunction(2)), a, b.wavefunction(4));
}

}  // namespace

TEST_CASE("wavelet is symmetric, unit norm and built from Ai") {
    const auto e = airy_wavelet({}, kGrid);
    CHECK(std::fabs(inner_product(e, e).real() - 1.0) <= 1e-10);
    for (std::size_t i = 0; i < kGrid.size(); ++i) CHECK(e[i] == e[kGrid.size() - 1 - i]);
    const double q = -1.472910;
    const double ratio = e[5000].real() / (oracle::ai(q) * oracle::ai(q));
    for (std::size_t i = 4500; i <= 5500; i += 50) {
        const double x = kGrid.point(i);
        CHECK(e[i].real() == doctest::Approx(ratio * oracle::ai(x + q) * oracle::ai(-x + q)).epsilon(1e-9));
    }
}

TEST_CASE("wavelet preconditions") {
    CHECK_THROWS_AS(airy_wavelet({}, Grid(-30.0, 50.0, 8001)), DomainError);
    CHECK_THROWS_AS(airy_wavelet({}, Grid(-3.0, 3.0, 601)), PrecisionError);
    CHECK_THROWS_AS(airy_wavelet({std::nan("")}, kGrid), DomainError);
}

TEST_CASE("z = 0 reconstructs a field inside the basis span") {
    const auto field = few_state_field();
    const auto back = propagate_grin(field, kMedium, basis(), 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) worst = std::max(worst, std::abs(back[i] - field[i]));
    CHECK(worst <= 1e-8);
    const std::vector<double> z = {0.0};
    const auto row = intensity_map(field, kMedium, basis(), z).row(0);
    for (std::size_t i = 0; i < field.size(); ++i) CHECK(std::fabs(row[i] - std::norm(field[i])) <= 1e-8);
}

TEST_CASE("wavelet reconstruction error shrinks with the basis size") {
    const auto e = airy_wavelet({}, kGrid);
    double previous = 1.0;
    for (int n : {30, 60, 120}) {
        const auto b = build_basis(1.0, n, kGrid);
        const auto back = propagate_grin(e, kMedium, b, 0.0);
        double worst = 0.0;
        for (std::size_t i = 0; i < e.size(); ++i) worst = std::max(worst, std::abs(back[i] - e[i]));
        MESSAGE("N = " << n << ": max |E(x,0) - E0| = " << worst);
        CHECK(worst < previous);
        previous = worst;
    }
}

TEST_CASE("propagation equals evolution at t = -z/kappa up to the global phase") {
    const auto e = airy_wavelet({}, kGrid);
    const auto c = project(e, basis());
    for (double z : {0.3, 4.0, 37.5}) {
        const auto field = propagate_grin(e, kMedium, basis(), z);
        const auto state = evolve(c, basis(), -z / kMedium.kappa);
        const Complex phase = std::polar(1.0, kMedium.kappa * z);
        double worst = 0.0;
        for (std::size_t i = 0; i < field.size(); ++i) worst = std::max(worst, std::abs(field[i] * phase - state[i]));
        CAPTURE(z);
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("intensity map without the global phase equals |E|^2 with it") {
    const auto e = airy_wavelet({}, kGrid);
    const std::vector<double> z = {0.0, 1.0, 12.5, 90.0};
    const auto map = intensity_map(e, kMedium, basis(), z);
    REQUIRE(map.values.size() == z.size() * kGrid.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        const auto field = propagate_grin(e, kMedium, basis(), z[k]);
        const auto row = map.row(k);
        double worst = 0.0;
        for (std::size_t i = 0; i < field.size(); ++i) worst = std::max(worst, std::fabs(row[i] - std::norm(field[i])));
        CHECK(worst <= 1e-12);
    }
    CHECK_THROWS_AS(map.row(z.size()), DomainError);
}

TEST_CASE("rows are non-negative, mirror symmetric and carry constant power") {
    const auto e = airy_wavelet({}, kGrid);
    std::vector<double> z;
    for (int k = 0; k < 40; ++k) z.push_back(2.5 * k);
    const auto map = intensity_map(e, kMedium, basis(), z);
    const double captured = project(e, basis()).captured_weight();
    for (std::size_t k = 0; k < z.size(); ++k) {
        const auto row = map.row(k);
        CHECK(*std::min_element(row.begin(), row.end()) >= 0.0);
        CHECK(mirror_asymmetry(row, kGrid) <= 1e-8);
        CHECK(std::fabs(row_norm(row, kGrid) - captured) <= 1e-8);
    }
    CHECK(std::fabs(captured - 1.0) <= 1e-6);
}

TEST_CASE("medium must match the basis") {
    const auto e = airy_wavelet({}, kGrid);
    CHECK_THROWS_AS(propagate_grin(e, {1.0, 0.1}, basis(), 1.0), DomainError);
    CHECK_THROWS_AS(propagate_grin(e, {0.0, 1.0}, basis(), 1.0), DomainError);
    const std::vector<double> z = {1.0};
    CHECK_THROWS_AS(intensity_map(e, {1.0, 0.1}, basis(), z), DomainError);
}

TEST_CASE("second moment trace agrees with the intensity rows") {
    const auto e = airy_wavelet({}, kGrid);
    const std::vector<double> z = {0.0, 3.0, 11.0, 60.0};
    const auto map = intensity_map(e, kMedium, basis(), z);
    const auto trace = second_moment_trace(e, kMedium, basis(), z);
    const auto w = quadrature_weights(kGrid);
    for (std::size_t k = 0; k < z.size(); ++k) {
        const auto row = map.row(k);
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = 0; i < row.size(); ++i) {
            const double x = kGrid.point(i);
            num += w[i] * x * x * row[i];
            den += w[i] * row[i];
        }
        CHECK(trace[k] == doctest::Approx(num / den).epsilon(1e-10));
    }
}

TEST_CASE("on-axis intensity varies and recurs") {
    const auto field = few_state_field();
    std::vector<double> z;
    for (int k = 0; k <= 40000; ++k) z.push_back(0.05 * k);
    const auto axis = on_axis_intensity(field, kMedium, basis(), z);
    const double i0 = axis.front();
    CHECK(i0 == doctest::Approx(std::norm(field[5000])).epsilon(1e-8));
    const auto [lo, hi] = std::minmax_element(axis.begin(), axis.end());
    CHECK(*hi - *lo > 0.1 * i0);

    // Leave the initial peak before looking for a return.
    std::size_t k = 0;
    while (k < axis.size() && axis[k] > 0.5 * i0) ++k;
    double best = 1.0;
    double best_z = -1.0;
    for (; k < axis.size(); ++k) {
        const double rel = std::fabs(axis[k] - i0) / i0;
        if (rel < best) {
            best = rel;
            best_z = z[k];
        }
    }
    MESSAGE("closest on-axis return: " << best << " at z = " << best_z);
    CHECK(best <= 0.02);
}

TEST_CASE("mirror asymmetry detects a broken row") {
    std::vector<double> row(kGrid.size(), 1.0);
    CHECK(mirror_asymmetry(row, kGrid) == 0.0);
    row[10] = 1.5;
    CHECK(mirror_asymmetry(row, kGrid) == doctest::Approx(0.5));
    CHECK_THROWS_AS(mirror_asymmetry(row, Grid(-50.0, 51.0, 10001)), DomainError);
    row.pop_back();
    CHECK_THROWS_AS(mirror_asymmetry(row, kGrid), DomainError);
}
