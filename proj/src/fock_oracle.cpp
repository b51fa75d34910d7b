#include "becdeco/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace becdeco {

namespace {

using Complex = std::complex<double>;

// b in the truncated basis: b|n> = √n |n−1>.
Eigen::MatrixXcd annihilation(int dim) {
    Eigen::MatrixXcd b = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) b(n - 1, n) = std::sqrt(static_cast<double>(n));
    return b;
}

// Generator applied elementwise; b and b† are the truncated matrices, so the
// trace is conserved exactly.
Eigen::MatrixXcd liouvillian(const Eigen::MatrixXcd& rho, const FockChannel& ch) {
    const int dim = static_cast<int>(rho.rows());
    const int top = dim - 1;
    Eigen::MatrixXcd out(dim, dim);
    for (int n = 0; n < dim; ++n) {
        for (int m = 0; m < dim; ++m) {
            Complex v = Complex(0, -ch.omega * (m - n)) * rho(m, n);
            // γ₁ (bρb† − ½{b†b, ρ})
            if (m < top && n < top) v += ch.gamma1 * std::sqrt((m + 1.0) * (n + 1.0)) * rho(m + 1, n + 1);
            v -= 0.5 * ch.gamma1 * (m + n) * rho(m, n);
            // γ₂ (b†ρb − ½{bb†, ρ}); bb† = diag(1, ..., N, 0) after truncation.
            if (m > 0 && n > 0) v += ch.gamma2 * std::sqrt(static_cast<double>(m) * n) * rho(m - 1, n - 1);
            const double bbd_m = m < top ? m + 1.0 : 0.0;
            const double bbd_n = n < top ? n + 1.0 : 0.0;
            v -= 0.5 * ch.gamma2 * (bbd_m + bbd_n) * rho(m, n);
            out(m, n) = v;
        }
    }
    return out;
}

double tail_population(const Eigen::MatrixXcd& rho, int from) {
    double p = 0.0;
    for (int n = std::max(from, 0); n < rho.rows(); ++n) p += rho(n, n).real();
    return p;
}

}  // namespace

TruncatedDensityMatrix TruncatedDensityMatrix::from_pure(const Eigen::VectorXcd& amplitudes) {
    return {amplitudes * amplitudes.adjoint()};
}

Eigen::VectorXcd squeezed_vacuum_fock(double r, int n_cut) {
    if (n_cut < 0) throw std::invalid_argument("squeezed_vacuum_fock: cutoff must be >= 0");
    if (!(r >= 0.0)) throw std::invalid_argument("squeezed_vacuum_fock: r must be >= 0");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_cut + 1);
    const double t = -std::tanh(r);
    // c_{2n} = tⁿ √((2n)!)/(2ⁿ n!) / √cosh r, built by the ratio
    // c_{2n+2}/c_{2n} = t √((2n+1)(2n+2)) / (2(n+1)).
    double amp = 1.0 / std::sqrt(std::cosh(r));
    for (int n = 0; 2 * n <= n_cut; ++n) {
        c(2 * n) = amp;
        amp *= t * std::sqrt((2.0 * n + 1.0) * (2.0 * n + 2.0)) / (2.0 * (n + 1.0));
    }
    if (std::abs(c.squaredNorm() - 1.0) > 1e-10) {
        throw CutoffError("squeezed_vacuum_fock: cutoff " + std::to_string(n_cut) + " too small for r = " +
                          std::to_string(r));
    }
    return c;
}

Eigen::VectorXcd coherent_state_fock(std::complex<double> alpha, int n_cut) {
    if (n_cut < 0) throw std::invalid_argument("coherent_state_fock: cutoff must be >= 0");
    Eigen::VectorXcd c(n_cut + 1);
    Complex amp = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n <= n_cut; ++n) {
        c(n) = amp;
        amp *= alpha / std::sqrt(n + 1.0);
    }
    if (std::abs(c.squaredNorm() - 1.0) > 1e-10) {
        throw CutoffError("coherent_state_fock: cutoff " + std::to_string(n_cut) + " too small");
    }
    return c;
}

FockSample measure(const TruncatedDensityMatrix& state, double t, double kappa) {
    const auto& rho = state.rho;
    const int dim = static_cast<int>(rho.rows());
    Complex b1 = 0.0, b2 = 0.0;
    double n = 0.0;
    for (int m = 0; m < dim; ++m) {
        n += m * rho(m, m).real();
        if (m + 1 < dim) b1 += std::sqrt(m + 1.0) * rho(m + 1, m);
        if (m + 2 < dim) b2 += std::sqrt((m + 1.0) * (m + 2.0)) * rho(m + 2, m);
    }
    const double k2 = kappa * kappa;
    FockSample s{};
    s.t = t;
    s.trace = state.trace();
    s.purity = state.purity();
    s.occupation = n;
    s.top_population = rho(dim - 1, dim - 1).real();
    s.d << b1.real() / kappa, b1.imag() / kappa;
    Eigen::Matrix2d second;
    second << (2.0 * b2.real() + 2.0 * n + 1.0) / (4.0 * k2), 2.0 * b2.imag() / (4.0 * k2),
              2.0 * b2.imag() / (4.0 * k2), (-2.0 * b2.real() + 2.0 * n + 1.0) / (4.0 * k2);
    s.sigma = second - s.d * s.d.transpose();
    return s;
}

double max_third_central_moment(const TruncatedDensityMatrix& state, double kappa) {
    const int dim = static_cast<int>(state.rho.rows());
    const Eigen::MatrixXcd b = annihilation(dim);
    const Eigen::MatrixXcd x1 = (b + b.adjoint()) / (2.0 * kappa);
    const Eigen::MatrixXcd x2 = Complex(0, 1) * (b.adjoint() - b) / (2.0 * kappa);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    double worst = 0.0;
    for (int j = 0; j < 4; ++j) {
        const double theta = j * std::numbers::pi / 4.0;
        const Eigen::MatrixXcd x = std::cos(theta) * x1 + std::sin(theta) * x2;
        const Complex mean = (x * state.rho).trace();
        const Eigen::MatrixXcd dx = x - mean * id;
        worst = std::max(worst, std::abs((dx * dx * dx * state.rho).trace()));
    }
    return worst;
}

std::vector<FockSample> lindblad_step_integrate(const TruncatedDensityMatrix& rho0, const FockChannel& ch,
                                                const std::vector<double>& t_grid, const FockOptions& opts,
                                                std::vector<TruncatedDensityMatrix>* states) {
    if (t_grid.empty()) throw std::invalid_argument("lindblad_step_integrate: empty time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("lindblad_step_integrate: time grid must be strictly increasing");
        }
    }
    if (ch.gamma1 < 0.0 || ch.gamma2 < 0.0) {
        throw std::invalid_argument("lindblad_step_integrate: rates must be non-negative");
    }
    const int n_cut = rho0.cutoff();
    if (n_cut < 1) throw std::invalid_argument("lindblad_step_integrate: cutoff must be >= 1");
    const int guard = static_cast<int>(std::ceil(0.9 * n_cut));
    if (tail_population(rho0.rho, guard) >= 1e-8) {
        throw CutoffError("lindblad_step_integrate: initial population above 0.9 N_cut is not negligible");
    }

    const double scale = std::abs(ch.omega) * n_cut + (ch.gamma1 + ch.gamma2) * (n_cut + 1.0);
    const double max_dt = scale > 0.0 ? opts.step_scale / scale : std::numeric_limits<double>::infinity();

    Eigen::MatrixXcd rho = rho0.rho;
    std::vector<FockSample> out;
    out.reserve(t_grid.size());
    out.push_back(measure({rho}, t_grid.front(), opts.kappa));
    if (states) states->push_back({rho});

    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const double span = t_grid[i] - t_grid[i - 1];
        const auto steps = static_cast<long>(std::ceil(span / max_dt));
        const double dt = span / static_cast<double>(std::max(steps, 1L));
        for (long s = 0; s < std::max(steps, 1L); ++s) {
            const Eigen::MatrixXcd k1 = liouvillian(rho, ch);
            const Eigen::MatrixXcd k2 = liouvillian(rho + 0.5 * dt * k1, ch);
            const Eigen::MatrixXcd k3 = liouvillian(rho + 0.5 * dt * k2, ch);
            const Eigen::MatrixXcd k4 = liouvillian(rho + dt * k3, ch);
            rho += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            rho = 0.5 * (rho + rho.adjoint()).eval();
            const double top = rho(n_cut, n_cut).real();
            if (top > opts.leak_tolerance) {
                throw CutoffError("lindblad_step_integrate: top-level population " + std::to_string(top) +
                                  " exceeds leak tolerance; raise the cutoff");
            }
        }
        out.push_back(measure({rho}, t_grid[i], opts.kappa));
        if (states) states->push_back({rho});
    }
    return out;
}

}  // namespace becdeco
