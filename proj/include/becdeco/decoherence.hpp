// Closed-form purity, nonclassical depth, squeezing and
// occupation of a single-mode Gaussian state relaxing in a thermal channel,
// plus the purity-minimum and classicality times.
//
// Inputs: initial purity μ₀ and squeezing r₀, bath purity μ∞ = tanh(β_q/2),
// net damping rate γ ≥ 0 (γ = 0 freezes every metric).

#pragma once

#include <optional>
#include <vector>

namespace becdeco {

struct DecoherenceInputs {
    double mu0;
    double r0;
    double mu_inf;
    double gamma;
};

double purity_evolution(const DecoherenceInputs& in, double t);
double nonclassical_depth_evolution(const DecoherenceInputs& in, double t);
double squeezing_evolution(const DecoherenceInputs& in, double t);
double occupation_evolution(double n0, double n_th, double gamma, double t);

// Interior purity minimum; std::nullopt when μ(t) has none for t > 0.
std::optional<double> purity_minimum_time(const DecoherenceInputs& in);
// Time at which τ reaches 0. +inf when μ∞ = 1 (zero temperature) or γ = 0;
// 0 when the state starts classical.
double classicality_time(const DecoherenceInputs& in);

struct MetricTrajectory {
    std::vector<double> t;
    std::vector<double> mu;
    std::vector<double> tau;
    std::vector<double> r;
    std::vector<double> n;
    std::optional<double> t_min;
    double t_tau0;
    double mu_inf;
};

MetricTrajectory metric_trajectory(const DecoherenceInputs& in, double n0, double n_th,
                                   const std::vector<double>& t_grid);

// μ∞ = 1/(1 + 2N_th)
double asymptotic_purity(double n_th);

}  // namespace becdeco
