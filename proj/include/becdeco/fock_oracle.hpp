// Brute-force check of the Gaussian fast path: the two-operator
// thermal Lindblad equation integrated for the density matrix in a truncated
// number basis |0>, ..., |N_cut>.
//
// Only meant for small squeezing (r ≤ 1); an r = 10 state would need ~1e9
// basis states.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace becdeco {

class CutoffError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TruncatedDensityMatrix {
    Eigen::MatrixXcd rho;

    static TruncatedDensityMatrix from_pure(const Eigen::VectorXcd& amplitudes);
    int cutoff() const { return static_cast<int>(rho.rows()) - 1; }
    double trace() const { return rho.trace().real(); }
    double purity() const { return rho.cwiseAbs2().sum(); }
};

// S(r)|0> with amplitudes c_{2n} = (−tanh r)ⁿ √((2n)!) / (2ⁿ n! √cosh r).
// Throws CutoffError when the truncated norm misses 1 by more than 1e-10.
Eigen::VectorXcd squeezed_vacuum_fock(double r, int n_cut);
// |α> with amplitudes e^{−|α|²/2} αⁿ/√n!.
Eigen::VectorXcd coherent_state_fock(std::complex<double> alpha, int n_cut);

// ĉ₁ = √γ₁ b, ĉ₂ = √γ₂ b†, Ĥ = ħω b†b.
struct FockChannel {
    double omega = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};

struct FockSample {
    double t;
    double trace;
    double purity;
    double occupation;
    double top_population;
    Eigen::Vector2d d;
    Eigen::Matrix2d sigma;
};

struct FockOptions {
    double kappa = 0.7071067811865476;
    // RK4 step is chosen so that dt × (spectral scale of the generator) ≤ this.
    double step_scale = 0.05;
    double leak_tolerance = 1e-6;
};

// First and second quadrature moments, purity and occupation of ρ.
FockSample measure(const TruncatedDensityMatrix& state, double t, double kappa);

// Largest |⟨(X_θ − ⟨X_θ⟩)³⟩| over θ ∈ {0, π/4, π/2, 3π/4}; the four directions
// fix all symmetric third-order central moments of (x₁, x₂).
double max_third_central_moment(const TruncatedDensityMatrix& state, double kappa);

// dρ/dt = −iω[b†b, ρ] + Σ_i (ĉ_i ρ ĉ_i† − ½{ĉ_i†ĉ_i, ρ}) with fixed-step RK4.
// Emits one sample per grid point. Throws CutoffError if the initial state has
// population ≥ 1e-8 above 0.9·N_cut, or the top level exceeds leak_tolerance.
std::vector<FockSample> lindblad_step_integrate(const TruncatedDensityMatrix& rho0, const FockChannel& channel,
                                                const std::vector<double>& t_grid, const FockOptions& opts = {},
                                                std::vector<TruncatedDensityMatrix>* states = nullptr);

}  // namespace becdeco
