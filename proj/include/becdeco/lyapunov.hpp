// First- and second-moment evolution under a Gaussian Lindblad channel
//
//   dd/dt = 𝓗₁ + A d,        dσ/dt = Aσ + σAᵀ + D
//
// with A = 𝓗₂ + (1/2κ²) Ω Im(C†C) and D = (1/4κ⁴) Ω Re(C†C) Ωᵀ for jump
// operators ĉ_i = C_ij x̂_j.

#pragma once

#include "becdeco/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace becdeco {

// Ĥ = H0 + κ x̂ᵀH1 + κ² x̂ᵀH2 x̂, stored in frequency units (divided by ħ).
template <typename Scalar>
struct QuadraticHamiltonian {
    Scalar h0 = Scalar(0);
    Vector<Scalar> h1;
    Matrix<Scalar> h2;

    // 𝓗₂ = Ω H2
    Matrix<Scalar> drift_part() const {
        return SymplecticConvention<Scalar>::omega(h2.rows() / 2) * h2;
    }
    // 𝓗₁ = Ω H1
    Vector<Scalar> linear_part() const {
        if (h1.size() == 0) return Vector<Scalar>::Zero(h2.rows());
        return SymplecticConvention<Scalar>::omega(h2.rows() / 2) * h1;
    }
};

template <typename Scalar>
struct ThermalChannelData {
    Scalar gamma;
    Scalar omega_prime;
    Matrix<Scalar> sigma_inf;
};

template <typename Scalar>
struct LindbladChannel {
    Matrix<Scalar> A;
    Matrix<Scalar> D;
    Vector<Scalar> h1;  // 𝓗₁, zero unless a linear drive is present
    std::optional<ThermalChannelData<Scalar>> thermal;

    Eigen::Index dimension() const { return A.rows(); }
};

template <typename Scalar>
LindbladChannel<Scalar> channel_from_lindblad_ops(const QuadraticHamiltonian<Scalar>& hamiltonian,
                                                  const Matrix<std::complex<Scalar>>& jump,
                                                  SymplecticConvention<Scalar> convention = {}) {
    const Eigen::Index dim = hamiltonian.h2.rows();
    if (dim == 0 || dim % 2 != 0 || hamiltonian.h2.cols() != dim) {
        throw std::invalid_argument("channel_from_lindblad_ops: H2 must be 2M x 2M");
    }
    if ((hamiltonian.h2 - hamiltonian.h2.transpose()).cwiseAbs().maxCoeff() >
        Scalar(1e-12) * std::max(Scalar(1), hamiltonian.h2.cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("channel_from_lindblad_ops: H2 must be symmetric");
    }
    if (jump.size() != 0 && jump.cols() != dim) {
        throw std::invalid_argument("channel_from_lindblad_ops: jump matrix needs 2M columns");
    }
    if (hamiltonian.h1.size() != 0 && hamiltonian.h1.size() != dim) {
        throw std::invalid_argument("channel_from_lindblad_ops: H1 must have 2M entries");
    }
    const Matrix<Scalar> om = SymplecticConvention<Scalar>::omega(dim / 2);
    const Scalar k2 = convention.kappa * convention.kappa;
    Matrix<std::complex<Scalar>> gram = Matrix<std::complex<Scalar>>::Zero(dim, dim);
    if (jump.size() != 0) gram = jump.adjoint() * jump;
    LindbladChannel<Scalar> ch;
    ch.A = hamiltonian.drift_part() + om * gram.imag() / (Scalar(2) * k2);
    ch.D = om * gram.real() * om.transpose() / (Scalar(4) * k2 * k2);
    ch.D = Scalar(0.5) * (ch.D + ch.D.transpose()).eval();
    ch.h1 = hamiltonian.linear_part();
    return ch;
}

// Single-mode thermal channel: A = −(γ/2)I + ω′Ω, D = γ σ∞.
template <typename Scalar>
LindbladChannel<Scalar> thermal_channel(Scalar gamma, Scalar n_th, Scalar omega_prime,
                                        SymplecticConvention<Scalar> convention = {}) {
    if (!(gamma >= Scalar(0))) throw std::invalid_argument("thermal_channel: gamma must be non-negative");
    const Matrix<Scalar> sigma_inf = thermal_state<Scalar>(n_th, convention).covariance();
    LindbladChannel<Scalar> ch;
    ch.A = Scalar(-0.5) * gamma * Matrix<Scalar>::Identity(2, 2) +
           omega_prime * SymplecticConvention<Scalar>::omega(1);
    ch.D = gamma * sigma_inf;
    ch.h1 = Vector<Scalar>::Zero(2);
    ch.thermal = ThermalChannelData<Scalar>{gamma, omega_prime, sigma_inf};
    return ch;
}

// R(t) = cos(ω′t) I + sin(ω′t) Ω
template <typename Scalar>
Matrix<Scalar> free_rotation(Scalar omega_prime, Scalar t) {
    return std::cos(omega_prime * t) * Matrix<Scalar>::Identity(2, 2) +
           std::sin(omega_prime * t) * SymplecticConvention<Scalar>::omega(1);
}

// d(t) = e^{−γt/2} R d₀,  σ(t) = e^{−γt} R σ₀ Rᵀ + (1 − e^{−γt}) σ∞
template <typename Scalar>
GaussianState<Scalar> evolve_closed_form(const GaussianState<Scalar>& state, const LindbladChannel<Scalar>& channel,
                                         Scalar t) {
    if (!channel.thermal) {
        throw std::invalid_argument("evolve_closed_form: needs the constant single-mode thermal channel");
    }
    if (state.modes() != 1) throw std::invalid_argument("evolve_closed_form: single-mode state required");
    if (!(t >= Scalar(0))) throw std::invalid_argument("evolve_closed_form: time must be non-negative");
    const auto& th = *channel.thermal;
    const Scalar decay = std::exp(-th.gamma * t);
    const Matrix<Scalar> rot = free_rotation(th.omega_prime, t);
    const Vector<Scalar> d = std::exp(Scalar(-0.5) * th.gamma * t) * (rot * state.displacement());
    const Matrix<Scalar> sigma =
        decay * (rot * state.covariance() * rot.transpose()) - std::expm1(-th.gamma * t) * th.sigma_inf;
    return GaussianState<Scalar>(d, sigma, state.convention());
}

template <typename Scalar>
using ChannelSchedule = std::function<LindbladChannel<Scalar>(Scalar)>;

struct IntegratorOptions {
    double tolerance = 1e-10;       // per-step error, entrywise relative
    double min_step = 1e-14;        // relative to the grid span
    double initial_step = 0.0;      // 0 picks 1/100 of the first grid interval
};

class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

template <typename Scalar>
struct Moments {
    Vector<Scalar> d;
    Matrix<Scalar> sigma;
};

template <typename Scalar>
Moments<Scalar> moment_rhs(const LindbladChannel<Scalar>& ch, const Moments<Scalar>& y) {
    return {ch.h1 + ch.A * y.d, ch.A * y.sigma + y.sigma * ch.A.transpose() + ch.D};
}

template <typename Scalar>
Moments<Scalar> rk4_step(const ChannelSchedule<Scalar>& schedule, Scalar t, Scalar h, const Moments<Scalar>& y) {
    const auto at_start = schedule(t);
    const auto at_mid = schedule(t + h / 2);
    const auto at_end = schedule(t + h);
    const auto axpy = [](const Moments<Scalar>& a, Scalar s, const Moments<Scalar>& b) {
        return Moments<Scalar>{a.d + s * b.d, a.sigma + s * b.sigma};
    };
    const auto k1 = moment_rhs(at_start, y);
    const auto k2 = moment_rhs(at_mid, axpy(y, h / 2, k1));
    const auto k3 = moment_rhs(at_mid, axpy(y, h / 2, k2));
    const auto k4 = moment_rhs(at_end, axpy(y, h, k3));
    Moments<Scalar> out{y.d + h / 6 * (k1.d + 2 * k2.d + 2 * k3.d + k4.d),
                        y.sigma + h / 6 * (k1.sigma + 2 * k2.sigma + 2 * k3.sigma + k4.sigma)};
    out.sigma = Scalar(0.5) * (out.sigma + out.sigma.transpose()).eval();
    return out;
}

// Entrywise error of `a` against the more accurate `b`, each entry scaled by
// max(|b_ij|, floor) so tiny entries are held to the same relative standard.
template <typename Scalar>
Scalar step_error(const Moments<Scalar>& a, const Moments<Scalar>& b, Scalar floor) {
    Scalar err = 0;
    for (Eigen::Index i = 0; i < b.sigma.size(); ++i) {
        const Scalar ref = std::max(std::abs(b.sigma(i)), floor);
        err = std::max(err, std::abs(a.sigma(i) - b.sigma(i)) / ref);
    }
    for (Eigen::Index i = 0; i < b.d.size(); ++i) {
        const Scalar ref = std::max(std::abs(b.d(i)), floor);
        err = std::max(err, std::abs(a.d(i) - b.d(i)) / ref);
    }
    return err;
}

}  // namespace detail

// Classic RK4 with step-doubling error control between caller-provided grid
// points. Returns one state per grid point; the first equals `state`.
template <typename Scalar>
std::vector<GaussianState<Scalar>> evolve_numeric(const GaussianState<Scalar>& state,
                                                  const ChannelSchedule<Scalar>& schedule,
                                                  const std::vector<Scalar>& t_grid,
                                                  const IntegratorOptions& opts = {}) {
    if (t_grid.empty()) throw std::invalid_argument("evolve_numeric: empty time grid");
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("evolve_numeric: time grid must be strictly increasing");
        }
    }
    const auto probe = schedule(t_grid.front());
    if (probe.dimension() != state.covariance().rows()) {
        throw std::invalid_argument("evolve_numeric: channel dimension does not match the state");
    }

    const Scalar span = t_grid.back() - t_grid.front();
    const Scalar min_step = Scalar(opts.min_step) * std::max(span, Scalar(1e-300));
    const Scalar tol = Scalar(opts.tolerance);
    // Entries below this fraction of the largest are judged on an absolute scale.
    const Scalar floor_fraction = Scalar(1e-14);

    std::vector<GaussianState<Scalar>> out;
    out.reserve(t_grid.size());
    out.push_back(state);

    detail::Moments<Scalar> y{state.displacement(), state.covariance()};
    Scalar h = opts.initial_step > 0 ? Scalar(opts.initial_step)
                                     : (t_grid.size() > 1 ? (t_grid[1] - t_grid[0]) / 100 : Scalar(1));
    Scalar t = t_grid.front();
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        const Scalar target = t_grid[i];
        while (t < target) {
            const bool last = t + h >= target;
            const Scalar step = last ? target - t : h;
            const Scalar floor = floor_fraction * std::max(y.sigma.cwiseAbs().maxCoeff(), Scalar(1e-300));
            const auto full = detail::rk4_step(schedule, t, step, y);
            const auto half = detail::rk4_step(schedule, t, step / 2, y);
            const auto both = detail::rk4_step(schedule, t + step / 2, step / 2, half);
            // Richardson estimate of the local error of `both`.
            const Scalar err = detail::step_error(full, both, floor) / 15;
            if (err > tol) {
                h = step / 2;
                if (h < min_step) {
                    throw IntegrationError("evolve_numeric: step size underflow at t = " +
                                           std::to_string(static_cast<double>(t)));
                }
                continue;
            }
            y = both;
            t = last ? target : t + step;
            if (err < tol / 64) h = std::min(step * 2, std::max(span, step));
            else if (!last) h = step;
        }
        try {
            out.emplace_back(y.d, y.sigma, state.convention());
        } catch (const std::domain_error& e) {
            throw IntegrationError(std::string("evolve_numeric: state left the physical set at t = ") +
                                   std::to_string(static_cast<double>(target)) + ": " + e.what());
        }
    }
    return out;
}

// Residual Aσ + σAᵀ + D, zero for a stationary covariance.
template <typename Scalar>
Matrix<Scalar> lyapunov_residual(const LindbladChannel<Scalar>& ch, const Matrix<Scalar>& sigma) {
    return ch.A * sigma + sigma * ch.A.transpose() + ch.D;
}

using LindbladChanneld = LindbladChannel<double>;
using QuadraticHamiltoniand = QuadraticHamiltonian<double>;

}  // namespace becdeco
