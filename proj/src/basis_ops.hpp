#pragma once

// Dense products over a SpectralBasis shared by dynamics and grin.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "airybasis/quadrature.hpp"
#include "airybasis/spectrum.hpp"

namespace airybasis::detail {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Indices n with |c_n| > rel * max|c|. Terms below this contribute under 1e-28 to any bilinear form.
inline std::vector<std::size_t> significant_indices(std::span<const Complex> c, double rel = 1e-14) {
    double cmax = 0.0;
    for (const auto& v : c) cmax = std::max(cmax, std::abs(v));
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < c.size(); ++n) {
        if (std::abs(c[n]) > rel * cmax) idx.push_back(n);
    }
    return idx;
}

inline RowMatrix gather_rows(const SpectralBasis& basis, const std::vector<std::size_t>& idx) {
    const auto cols = static_cast<Eigen::Index>(basis.grid().size());
    RowMatrix rows(static_cast<Eigen::Index>(idx.size()), cols);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto v = basis.values(idx[k]);
        rows.row(static_cast<Eigen::Index>(k)) = Eigen::Map<const Eigen::RowVectorXd>(v.data(), cols);
    }
    return rows;
}

/// M_ij = sum_x w(x) psi_i(x) psi_j(x).
inline Eigen::MatrixXd weighted_gram(const RowMatrix& rows, const Eigen::VectorXd& weights) {
    RowMatrix scaled = rows.array().rowwise() * weights.transpose().array();
    Eigen::MatrixXd m = scaled * rows.transpose();
    return 0.5 * (m + m.transpose());
}

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

/// Re(a^H M a) / Re(a^H G a) for each row a(t) = c * exp(i sign E t), evaluated in blocks.
/// `phase_sign` = -1 for exp(-iEt) (time evolution), +1 for exp(+iEz/kappa) (GRIN).
inline std::vector<double> quadratic_form_ratio(const std::vector<Complex>& c, const std::vector<double>& energies,
                                                const Eigen::MatrixXd& numerator, const Eigen::MatrixXd& gram,
                                                std::span<const double> times, double phase_sign,
                                                bool normalize) {
    const auto k = static_cast<Eigen::Index>(c.size());
    std::vector<double> out(times.size());
    constexpr std::size_t kBlock = 2048;
    for (std::size_t start = 0; start < times.size(); start += kBlock) {
        const std::size_t count = std::min(kBlock, times.size() - start);
        const auto b = static_cast<Eigen::Index>(count);
        Eigen::MatrixXd ar(b, k), ai(b, k);
        for (Eigen::Index r = 0; r < b; ++r) {
            const double t = times[start + static_cast<std::size_t>(r)];
            for (Eigen::Index j = 0; j < k; ++j) {
                const Complex a = c[static_cast<std::size_t>(j)] *
                                  std::polar(1.0, phase_sign * energies[static_cast<std::size_t>(j)] * t);
                ar(r, j) = a.real();
                ai(r, j) = a.imag();
            }
        }
        const Eigen::VectorXd num = ((ar * numerator).cwiseProduct(ar) + (ai * numerator).cwiseProduct(ai)).rowwise().sum();
        Eigen::VectorXd den = Eigen::VectorXd::Ones(b);
        if (normalize) den = ((ar * gram).cwiseProduct(ar) + (ai * gram).cwiseProduct(ai)).rowwise().sum();
        for (Eigen::Index r = 0; r < b; ++r) out[start + static_cast<std::size_t>(r)] = num(r) / den(r);
    }
    return out;
}

}  // namespace airybasis::detail
