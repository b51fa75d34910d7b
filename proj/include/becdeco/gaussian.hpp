// Symplectic phase-space representation of M-mode Gaussian states
//
// Quadratures are x = (1/2κ)[[1, 1], [-i, i]] (b, b†)ᵀ per mode, so that
// [x_i, x_j] = (i / 2κ²) Ω_ij. All types are templated on the real scalar.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace becdeco {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
struct SymplecticConvention {
    Scalar kappa = Scalar(1) / std::sqrt(Scalar(2));

    SymplecticConvention() = default;
    explicit SymplecticConvention(Scalar k) : kappa(k) {
        if (!(k > Scalar(0)) || !std::isfinite(static_cast<double>(k))) {
            throw std::invalid_argument("SymplecticConvention: kappa must be positive and finite");
        }
    }

    // Block-diagonal Ω built from [[0, 1], [-1, 0]].
    static Matrix<Scalar> omega(Eigen::Index modes) {
        Matrix<Scalar> om = Matrix<Scalar>::Zero(2 * modes, 2 * modes);
        for (Eigen::Index j = 0; j < modes; ++j) {
            om(2 * j, 2 * j + 1) = Scalar(1);
            om(2 * j + 1, 2 * j) = Scalar(-1);
        }
        return om;
    }

    // Symplectic eigenvalue of the vacuum, 1/(4κ²).
    Scalar vacuum_variance() const { return Scalar(1) / (Scalar(4) * kappa * kappa); }
};

// Symplectic eigenvalues of a positive-definite covariance matrix, ascending.
// They are the moduli of the eigenvalues of iΩσ; computed from the Hermitian
// matrix i LᵀΩL with σ = LLᵀ, whose spectrum is ±s_j.
template <typename Scalar>
Vector<Scalar> symplectic_eigenvalues(const Matrix<Scalar>& sigma) {
    const Eigen::Index dim = sigma.rows();
    if (dim % 2 != 0 || sigma.cols() != dim) {
        throw std::invalid_argument("symplectic_eigenvalues: covariance must be 2M x 2M");
    }
    Eigen::LLT<Matrix<Scalar>> llt(sigma);
    if (llt.info() != Eigen::Success) {
        throw std::domain_error("symplectic_eigenvalues: covariance is not positive definite");
    }
    const Matrix<Scalar> lower = llt.matrixL();
    const Matrix<Scalar> k = lower.transpose() * SymplecticConvention<Scalar>::omega(dim / 2) * lower;
    using Complex = std::complex<Scalar>;
    const Matrix<Complex> herm = Complex(0, 1) * k.template cast<Complex>();
    Eigen::SelfAdjointEigenSolver<Matrix<Complex>> solver(herm, Eigen::EigenvaluesOnly);
    // Eigenvalues come sorted ascending as (-s_M..-s_1, s_1..s_M).
    return solver.eigenvalues().tail(dim / 2);
}

template <typename Scalar>
class GaussianState {
public:
    GaussianState(Vector<Scalar> d, Matrix<Scalar> sigma,
                  SymplecticConvention<Scalar> convention = {})
        : d_(std::move(d)), sigma_(std::move(sigma)), convention_(convention) {
        validate();
    }

    const Vector<Scalar>& displacement() const { return d_; }
    const Matrix<Scalar>& covariance() const { return sigma_; }
    const SymplecticConvention<Scalar>& convention() const { return convention_; }
    Eigen::Index modes() const { return sigma_.rows() / 2; }

    // Total purity 1 / ((4κ²)^M √det σ).
    Scalar purity() const {
        const Scalar scale = std::pow(Scalar(4) * convention_.kappa * convention_.kappa,
                                      static_cast<Scalar>(modes()));
        return Scalar(1) / (scale * std::sqrt(sigma_.determinant()));
    }

    // Mean excitation number summed over modes: κ²Tr σ + κ² dᵀd − M/2.
    Scalar occupation() const {
        const Scalar k2 = convention_.kappa * convention_.kappa;
        return k2 * sigma_.trace() + k2 * d_.squaredNorm() - Scalar(0.5) * static_cast<Scalar>(modes());
    }

    Vector<Scalar> symplectic_spectrum() const { return symplectic_eigenvalues<Scalar>(sigma_); }

private:
    void validate() {
        const Eigen::Index dim = sigma_.rows();
        if (dim == 0 || dim % 2 != 0 || sigma_.cols() != dim || d_.size() != dim) {
            throw std::invalid_argument("GaussianState: need a 2M-vector and a 2M x 2M covariance");
        }
        if (!sigma_.allFinite() || !d_.allFinite()) {
            throw std::invalid_argument("GaussianState: non-finite moments");
        }
        const Scalar asym = (sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff();
        const Scalar scale = sigma_.cwiseAbs().maxCoeff();
        if (asym > Scalar(1e-12) * scale) {
            throw std::invalid_argument("GaussianState: covariance is not symmetric");
        }
        sigma_ = Scalar(0.5) * (sigma_ + sigma_.transpose()).eval();
        const Scalar s_min = symplectic_eigenvalues<Scalar>(sigma_).minCoeff();
        const Scalar bound = convention_.vacuum_variance();
        // Deficits within 1e-9 relative are numerical noise and accepted.
        if (s_min < bound * (Scalar(1) - Scalar(1e-9))) {
            throw std::domain_error("GaussianState: covariance violates the uncertainty bound (min symplectic eigenvalue " +
                                    std::to_string(static_cast<double>(s_min)) + " < " +
                                    std::to_string(static_cast<double>(bound)) + ")");
        }
    }

    Vector<Scalar> d_;
    Matrix<Scalar> sigma_;
    SymplecticConvention<Scalar> convention_;
};

template <typename Scalar>
struct SingleModeParams {
    Scalar mu;   // purity in (0, 1]
    Scalar r;    // squeezing magnitude
    Scalar psi;  // squeezing phase in [0, 2π)
    Scalar N;    // mean occupation, displacement included
};

// Williamson form: σ = (1/(4κ²μ)) [[cosh2r + sinh2r cosψ, sinh2r sinψ],
//                                  [sinh2r sinψ, cosh2r − sinh2r cosψ]].
template <typename Scalar>
GaussianState<Scalar> state_from_params(Scalar mu, Scalar r, Scalar psi,
                                        const Vector<Scalar>& d = Vector<Scalar>::Zero(2),
                                        SymplecticConvention<Scalar> convention = {}) {
    const auto finite = [](Scalar x) { return std::isfinite(static_cast<double>(x)); };
    if (!finite(mu) || !finite(r) || !finite(psi) || !d.allFinite()) {
        throw std::invalid_argument("state_from_params: non-finite input");
    }
    if (!(mu > Scalar(0) && mu <= Scalar(1))) {
        throw std::invalid_argument("state_from_params: purity must lie in (0, 1]");
    }
    if (r < Scalar(0)) {
        throw std::invalid_argument("state_from_params: squeezing must be non-negative");
    }
    if (d.size() != 2) {
        throw std::invalid_argument("state_from_params: single-mode displacement must have 2 entries");
    }
    const Scalar pref = convention.vacuum_variance() / mu;
    // Built as R(ψ/2) diag(e^{2r}, e^{−2r}) R(ψ/2)ᵀ so the squeezed variance
    // keeps full relative precision at large r instead of cosh 2r − sinh 2r.
    // Off-axis phases at r ≳ 5 still lose the small eigenvalue to rounding.
    const Scalar big = std::exp(Scalar(2) * r);
    const Scalar small = std::exp(Scalar(-2) * r);
    const Scalar ch = std::cos(psi / Scalar(2));
    const Scalar sh = std::sin(psi / Scalar(2));
    Matrix<Scalar> sigma(2, 2);
    sigma << big * ch * ch + small * sh * sh, (big - small) * ch * sh,
             (big - small) * ch * sh, big * sh * sh + small * ch * ch;
    return GaussianState<Scalar>(d, pref * sigma, convention);
}

template <typename Scalar>
SingleModeParams<Scalar> params_from_state(const GaussianState<Scalar>& state) {
    if (state.modes() != 1) {
        throw std::invalid_argument("params_from_state: single-mode state required");
    }
    const auto& sigma = state.covariance();
    const Scalar bound = state.convention().vacuum_variance();
    const Scalar s = std::sqrt(sigma.determinant());
    const Scalar mu = std::min(Scalar(1), bound / s);
    // sinh 2r from the eccentricity keeps small r accurate.
    const Scalar diff = sigma(0, 0) - sigma(1, 1);
    const Scalar off = Scalar(2) * sigma(0, 1);
    const Scalar sinh2r = std::hypot(diff, off) / (Scalar(2) * s);
    const Scalar r = Scalar(0.5) * std::asinh(sinh2r);
    Scalar psi = Scalar(0);
    if (r >= Scalar(1e-12)) {
        psi = std::atan2(off, diff);
        if (psi < Scalar(0)) psi += Scalar(2) * std::numbers::pi_v<Scalar>;
    }
    return {mu, r, psi, state.occupation()};
}

// Thermal state with mean occupation n_th: σ∞ = ((1 + 2 n_th)/(4κ²)) I.
template <typename Scalar>
GaussianState<Scalar> thermal_state(Scalar n_th, SymplecticConvention<Scalar> convention = {}) {
    if (!(n_th >= Scalar(0)) || !std::isfinite(static_cast<double>(n_th))) {
        throw std::invalid_argument("thermal_state: occupation must be finite and non-negative");
    }
    return GaussianState<Scalar>(Vector<Scalar>::Zero(2),
                                 (Scalar(1) + Scalar(2) * n_th) * convention.vacuum_variance() *
                                     Matrix<Scalar>::Identity(2, 2),
                                 convention);
}

// Nonclassical depth of a single-mode state, max(½(1 − e^{−2r}/μ), 0).
template <typename Scalar>
Scalar nonclassical_depth(const SingleModeParams<Scalar>& p) {
    return std::max(Scalar(0.5) * (Scalar(1) - std::exp(Scalar(-2) * p.r) / p.mu), Scalar(0));
}

using GaussianStated = GaussianState<double>;
using SingleModeParamsd = SingleModeParams<double>;
using SymplecticConventiond = SymplecticConvention<double>;

}  // namespace becdeco
