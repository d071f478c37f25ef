#include "airybasis/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "airybasis/errors.hpp"
#include "basis_ops.hpp"

namespace airybasis {
namespace {

constexpr double kClipThreshold = 1e-12;
constexpr double kNormTolerance = 1e-6;

void require_valid(const GaussianPacketParams& p) {
    if (!(p.sigma > 0.0) || !std::isfinite(p.sigma)) throw DomainError("gaussian_packet: sigma must be positive");
    if (!std::isfinite(p.x0)) throw DomainError("gaussian_packet: x0 must be finite");
}

void require_matching(const SpectralCoefficients& coeffs, const SpectralBasis& basis) {
    if (coeffs.basis_tag != basis.tag()) throw DomainError("coefficients belong to a different basis");
    if (coeffs.c.size() != basis.size()) throw DomainError("coefficient count does not match basis size");
}

double checked_norm2(double norm2) {
    if (!(std::fabs(norm2 - 1.0) < kNormTolerance)) {
        throw DomainError("mean_position: state is not normalized (norm^2 = " + std::to_string(norm2) + ")");
    }
    return norm2;
}

}  // namespace

double SpectralCoefficients::captured_weight() const {
    double sum = 0.0;
    for (const auto& v : c) sum += std::norm(v);
    return sum;
}

double gaussian_packet_value(const GaussianPacketParams& p, double x) {
    const double d = (x - p.x0) / p.sigma;
    return std::pow(2.0 / (std::numbers::pi * p.sigma * p.sigma), 0.25) * std::exp(-d * d);
}

WaveFunction gaussian_packet(const GaussianPacketParams& p, const Grid& grid) {
    require_valid(p);
    if (gaussian_packet_value(p, grid.x_min()) >= kClipThreshold ||
        gaussian_packet_value(p, grid.x_max()) >= kClipThreshold) {
        throw PrecisionError("gaussian_packet: packet clipped by the grid");
    }
    return sample([&](double x) { return Complex(gaussian_packet_value(p, x), 0.0); }, grid);
}

SpectralCoefficients project(const WaveFunction& phi, const SpectralBasis& basis) {
    if (!(phi.grid() == basis.grid())) throw DomainError("project: state and basis use different grids");
    const auto w = quadrature_weights(phi.grid());
    const std::size_t n_points = phi.size();
    std::vector<double> wr(n_points), wi(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        wr[i] = w[i] * phi[i].real();
        wi[i] = w[i] * phi[i].imag();
    }
    const detail::RowMatrix::ConstMapType psi(basis.matrix().data(), static_cast<Eigen::Index>(basis.size()),
                                              static_cast<Eigen::Index>(n_points));
    const Eigen::VectorXd re = psi * detail::to_eigen(wr);
    const Eigen::VectorXd im = psi * detail::to_eigen(wi);
    SpectralCoefficients out{basis.tag(), std::vector<Complex>(basis.size())};
    for (std::size_t n = 0; n < basis.size(); ++n) out.c[n] = Complex(re(static_cast<Eigen::Index>(n)), im(static_cast<Eigen::Index>(n)));
    return out;
}

WaveFunction evolve(const SpectralCoefficients& coeffs, const SpectralBasis& basis, double t) {
    require_matching(coeffs, basis);
    const std::size_t n_points = basis.grid().size();
    Eigen::RowVectorXd ar(static_cast<Eigen::Index>(basis.size())), ai(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t n = 0; n < basis.size(); ++n) {
        const Complex a = coeffs.c[n] * std::polar(1.0, -basis.energy(n) * t);
        ar(static_cast<Eigen::Index>(n)) = a.real();
        ai(static_cast<Eigen::Index>(n)) = a.imag();
    }
    const detail::RowMatrix::ConstMapType psi(basis.matrix().data(), static_cast<Eigen::Index>(basis.size()),
                                              static_cast<Eigen::Index>(n_points));
    const Eigen::RowVectorXd re = ar * psi;
    const Eigen::RowVectorXd im = ai * psi;
    std::vector<Complex> values(n_points);
    for (std::size_t i = 0; i < n_points; ++i) values[i] = Complex(re(static_cast<Eigen::Index>(i)), im(static_cast<Eigen::Index>(i)));
    return WaveFunction(basis.grid(), std::move(values));
}

double mean_position(const WaveFunction& phi) {
    const auto w = quadrature_weights(phi.grid());
    double norm2 = 0.0;
    double first = 0.0;
    for (std::size_t i = 0; i < phi.size(); ++i) {
        const double density = w[i] * std::norm(phi[i]);
        norm2 += density;
        first += density * phi.grid().point(i);
    }
    return first / checked_norm2(norm2);
}

std::vector<TrajectoryPoint> trajectory(const GaussianPacketParams& p, const SpectralBasis& basis,
                                        std::span<const double> times) {
    const auto coeffs = project(gaussian_packet(p, basis.grid()), basis);
    const auto idx = detail::significant_indices(coeffs.c);
    std::vector<Complex> c;
    std::vector<double> energies;
    for (auto n : idx) {
        c.push_back(coeffs.c[n]);
        energies.push_back(basis.energy(n));
    }
    const Grid& grid = basis.grid();
    const auto w = quadrature_weights(grid);
    std::vector<double> wx(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) wx[i] = w[i] * grid.point(i);

    const auto rows = detail::gather_rows(basis, idx);
    const Eigen::MatrixXd gram = detail::weighted_gram(rows, detail::to_eigen(w));
    const Eigen::MatrixXd position = detail::weighted_gram(rows, detail::to_eigen(wx));
    const auto num = detail::quadratic_form_ratio(c, energies, position, gram, times, -1.0, false);
    const auto den = detail::quadratic_form_ratio(c, energies, gram, gram, times, -1.0, false);

    std::vector<TrajectoryPoint> out(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) out[k] = {times[k], num[k] / checked_norm2(den[k])};
    return out;
}

double spectral_energy(const SpectralCoefficients& coeffs, const SpectralBasis& basis) {
    require_matching(coeffs, basis);
    double weight = 0.0;
    double energy = 0.0;
    for (std::size_t n = 0; n < basis.size(); ++n) {
        const double p = std::norm(coeffs.c[n]);
        weight += p;
        energy += p * basis.energy(n);
    }
    if (!(weight > 0.0)) throw DomainError("spectral_energy: zero coefficients");
    return energy / weight;
}

double energy_expectation(const WaveFunction& phi, double lambda) {
    auto h_phi = second_derivative(phi);
    for (std::size_t i = 0; i < phi.size(); ++i) {
        h_phi[i] = -0.5 * h_phi[i] + lambda * std::fabs(phi.grid().point(i)) * phi[i];
    }
    const WaveFunction h(phi.grid(), std::move(h_phi));
    const double norm2 = inner_product(phi, phi).real();
    if (!(norm2 > 0.0)) throw DomainError("energy_expectation: zero state");
    return inner_product(phi, h).real() / norm2;
}

Complex autocorrelation(const SpectralCoefficients& coeffs, const SpectralBasis& basis, double t) {
    require_matching(coeffs, basis);
    Complex sum{};
    double weight = 0.0;
    for (std::size_t n = 0; n < basis.size(); ++n) {
        const double p = std::norm(coeffs.c[n]);
        weight += p;
        sum += p * std::polar(1.0, -basis.energy(n) * t);
    }
    if (!(weight > 0.0)) throw DomainError("autocorrelation: zero coefficients");
    return sum / weight;
}

std::vector<TrajectoryPoint> turning_points(std::span<const TrajectoryPoint> traj) {
    std::vector<TrajectoryPoint> out;
    for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
        const double left = traj[i].mean_x - traj[i - 1].mean_x;
        const double right = traj[i + 1].mean_x - traj[i].mean_x;
        if (!(left * right < 0.0)) continue;
        // Vertex of the parabola through the three samples (uniform spacing assumed locally).
        const double h = 0.5 * (traj[i + 1].t - traj[i - 1].t);
        const double curvature = right - left;
        double shift = 0.0;
        double value = traj[i].mean_x;
        if (curvature != 0.0) {
            shift = -0.5 * (left + right) / curvature;
            value = traj[i].mean_x + 0.25 * (left + right) * shift;
        }
        out.push_back({traj[i].t + shift * h, value});
    }
    return out;
}

std::vector<EnvelopeSample> oscillation_envelope(std::span<const TrajectoryPoint> traj, double window) {
    if (!(window > 0.0)) throw DomainError("oscillation_envelope: window must be positive");
    std::vector<EnvelopeSample> out;
    if (traj.empty()) return out;
    const double t_end = traj.back().t;
    std::size_t begin = 0;
    for (double start = traj.front().t; start + window <= t_end; start += 0.5 * window) {
        while (begin < traj.size() && traj[begin].t < start) ++begin;
        double lo = traj[begin].mean_x;
        double hi = lo;
        for (std::size_t i = begin; i < traj.size() && traj[i].t < start + window; ++i) {
            lo = std::min(lo, traj[i].mean_x);
            hi = std::max(hi, traj[i].mean_x);
        }
        out.push_back({start, 0.5 * (hi - lo)});
    }
    return out;
}

CollapseRevivalReport analyze_collapse_revival(std::span<const TrajectoryPoint> traj, double x0, double window,
                                               double bounce_fraction, double collapse_fraction,
                                               double revival_fraction) {
    CollapseRevivalReport report;
    const auto envelope = oscillation_envelope(traj, window);
    if (envelope.empty()) return report;
    report.initial_amplitude = envelope.front().amplitude;

    std::size_t collapse_index = envelope.size();
    for (std::size_t k = 0; k < envelope.size(); ++k) {
        if (envelope[k].amplitude < collapse_fraction * report.initial_amplitude) {
            collapse_index = k;
            break;
        }
    }
    const double bounce_limit =
        collapse_index < envelope.size() ? envelope[collapse_index].t_start : traj.back().t;
    for (const auto& tp : turning_points(traj)) {
        if (tp.t >= bounce_limit) break;
        if (std::fabs(tp.mean_x) > bounce_fraction * std::fabs(x0)) ++report.initial_bounces;
    }
    report.bounces_ok = report.initial_bounces >= 3;
    if (collapse_index == envelope.size()) return report;

    std::size_t deepest = collapse_index;
    for (std::size_t k = collapse_index; k < envelope.size(); ++k) {
        if (envelope[k].amplitude < envelope[deepest].amplitude) deepest = k;
        if (envelope[k].amplitude > revival_fraction * report.initial_amplitude) {
            report.revival_time = envelope[k].t_start;
            report.revival_amplitude = envelope[k].amplitude;
            break;
        }
    }
    report.collapse_time = envelope[deepest].t_start;
    report.collapse_amplitude = envelope[deepest].amplitude;
    report.collapse_ok = true;
    report.revival_ok = report.revival_time >= 0.0;
    return report;
}

double classical_period(double x0, double lambda) {
    if (!(lambda > 0.0)) throw DomainError("classical_period: lambda must be positive");
    return 4.0 * std::sqrt(2.0 * std::fabs(x0) / lambda);
}

}  // namespace airybasis
