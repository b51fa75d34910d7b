// Phonon damping rates: asymptotic regime formulas, the Landau and
// Beliaev collision integrals, and the detailed-balance split of γ into the
// downward/upward Lindblad rates γ₁, γ₂.
//
// Sign convention: γ := γ₁ − γ₂ > 0 (downward minus upward), so the drift matrix
// is A = −(γ/2)I + ω′Ω and γ_T = γ₁ + γ₂ = γ coth(β_q/2).

#pragma once

#include "becdeco/bec_physics.hpp"
#include "becdeco/quadrature.hpp"

#include <string_view>

namespace becdeco {

enum class Regime { quantum, thermal_high, thermal_low, integral };

std::string_view to_string(Regime regime);

// Dimensionless cubic-vertex factors 𝒜, ℬ, ℒ for mode q and partners k, k′.
// ℒ includes its factor 2.
struct InteractionCoefficients {
    double A;
    double B;
    double L;
};

InteractionCoefficients vertex_coefficients(double q, double k, double k_prime, const CondensateParams& params);

// A closed-form rate together with whether the inputs sit inside the regime
// the formula assumes (ratio thresholds 0.3 / 3).
struct RateEstimate {
    double rate;
    bool regime_valid;
};

// (3/640π) ħω⁵/(m n c⁵) · [1 + (k_BT/ħω)³]; valid for k_BT/ħω < 0.3.
RateEstimate gamma_beliaev_asymptotic(double omega_q, const CondensateParams& params);
// (3π/8) (k_BT a/ħc) ω; valid for k_BT/μ > 3 and μ/ħω > 3.
RateEstimate gamma_landau_high_temperature(double omega_q, const CondensateParams& params);
// (3π³/40) (k_BT)⁴ ω/(m n ħ³ c⁵); valid for μ/k_BT > 3 and k_BT/ħω > 3.
RateEstimate gamma_landau_low_temperature(double omega_q, const CondensateParams& params);

struct IntegralRates {
    double gamma_B;  // Beliaev, net (1 + N_k + N_l)
    double gamma_L;  // Landau, net (N_k − N_l)
    double gamma_1;  // downward: Beliaev (1+N_k)(1+N_l) plus Landau N_k(1+N_l)
    double gamma_2;  // upward: Beliaev N_k N_l plus Landau N_l(1+N_k)
    double error_B;
    double error_L;
};

// Evaluates both collision integrals on the Bogoliubov branch. Energy deltas are
// resolved exactly: the partner wavenumber l follows from energy conservation
// and the angular integral contributes l/(2 q k |dω_l/dl|). The volume cancels.
// Throws QuadratureError when the tolerance is not met.
IntegralRates gamma_integral(double omega_q, const CondensateParams& params,
                             const QuadratureConfig& cfg = {});

struct DampingResult {
    double gamma;    // γ₁ − γ₂
    double gamma_B;
    double gamma_L;
    double gamma_1;
    double gamma_2;
    double gamma_T;  // γ (1 + 2 N_th)
    double beta_q;   // ħω/k_BT, +inf at T = 0
    double n_th;
    Regime regime;
    bool regime_valid;
};

// Builds γ₁ = γ(1 + N_th), γ₂ = γ N_th, γ_T = γ(1 + 2N_th) from a net rate.
DampingResult split_rates(double gamma, double gamma_B, double gamma_L, double omega_q, double temperature,
                          Regime regime, bool regime_valid = true);

// Quantum if k_BT/ħω < 0.3; thermal_high if k_BT/μ > 3 and μ/ħω > 3;
// thermal_low if μ/k_BT > 3 and k_BT/ħω > 3; otherwise the collision integrals.
DampingResult select_regime(double omega_q, const CondensateParams& params, const QuadratureConfig& cfg = {});

// Closed form only: picks the formula whose regime the inputs are closest to
// and reports regime_valid = false when none of the thresholds hold.
DampingResult asymptotic_damping(double omega_q, const CondensateParams& params);

}  // namespace becdeco
