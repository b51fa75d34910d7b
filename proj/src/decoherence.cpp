#include "becdeco/decoherence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace becdeco {

namespace {

void validate(const DecoherenceInputs& in) {
    if (!(in.mu0 > 0.0 && in.mu0 <= 1.0)) throw std::invalid_argument("decoherence: mu0 must lie in (0, 1]");
    if (!(in.mu_inf > 0.0 && in.mu_inf <= 1.0)) {
        throw std::invalid_argument("decoherence: mu_inf must lie in (0, 1]");
    }
    if (!(in.r0 >= 0.0) || !std::isfinite(in.r0)) throw std::invalid_argument("decoherence: r0 must be >= 0");
    if (!(in.gamma >= 0.0) || !std::isfinite(in.gamma)) {
        throw std::invalid_argument("decoherence: gamma must be finite and >= 0");
    }
}

void validate_time(double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("decoherence: time must be non-negative");
}

}  // namespace

double asymptotic_purity(double n_th) {
    if (!(n_th >= 0.0)) throw std::invalid_argument("asymptotic_purity: occupation must be >= 0");
    return 1.0 / (1.0 + 2.0 * n_th);
}

double purity_evolution(const DecoherenceInputs& in, double t) {
    validate(in);
    validate_time(t);
    const double e = std::exp(-in.gamma * t);
    const double one_minus = -std::expm1(-in.gamma * t);
    const double a = in.mu0 / in.mu_inf;
    const double f = e * e + a * a * one_minus * one_minus + 2.0 * a * e * one_minus * std::cosh(2.0 * in.r0);
    return in.mu0 / std::sqrt(f);
}

std::optional<double> purity_minimum_time(const DecoherenceInputs& in) {
    validate(in);
    if (in.gamma == 0.0) return std::nullopt;
    const double a = in.mu0 / in.mu_inf;
    const double c = std::cosh(2.0 * in.r0);
    // dμ/dt at t = 0 is −μ₀γ(a cosh2r₀ − 1); a minimum needs an initial decrease.
    if (!(a * c > 1.0)) return std::nullopt;
    const double numerator = a + 1.0 / a - 2.0 * c;
    const double denominator = a - c;
    if (denominator == 0.0) return std::nullopt;
    const double arg = numerator / denominator;
    if (!(arg > 1.0) || !std::isfinite(arg)) return std::nullopt;
    return std::log(arg) / in.gamma;
}

double nonclassical_depth_evolution(const DecoherenceInputs& in, double t) {
    validate(in);
    validate_time(t);
    const double e = std::exp(-in.gamma * t);
    const double tau = (e * (1.0 - in.mu_inf / in.mu0 * std::exp(-2.0 * in.r0)) + in.mu_inf - 1.0) /
                       (2.0 * in.mu_inf);
    return std::max(tau, 0.0);
}

double classicality_time(const DecoherenceInputs& in) {
    validate(in);
    const double numerator = 1.0 - in.mu_inf / in.mu0 * std::exp(-2.0 * in.r0);
    if (numerator <= 0.0) return 0.0;  // never nonclassical
    const double denominator = 1.0 - in.mu_inf;
    if (in.gamma == 0.0 || denominator <= 0.0) return std::numeric_limits<double>::infinity();
    const double arg = numerator / denominator;
    if (arg <= 1.0) return 0.0;
    return std::log(arg) / in.gamma;
}

double squeezing_evolution(const DecoherenceInputs& in, double t) {
    validate(in);
    validate_time(t);
    const double e = std::exp(-in.gamma * t);
    const double one_minus = -std::expm1(-in.gamma * t);
    const double mu = purity_evolution(in, t);
    double ch = mu * (e * std::cosh(2.0 * in.r0) / in.mu0 + one_minus / in.mu_inf);
    // Values just below 1 are rounding noise around r = 0.
    if (ch < 1.0) {
        if (ch < 1.0 - 1e-12) throw std::domain_error("squeezing_evolution: cosh 2r fell below 1");
        ch = 1.0;
    }
    return 0.5 * std::acosh(ch);
}

double occupation_evolution(double n0, double n_th, double gamma, double t) {
    if (!(n0 >= 0.0) || !(n_th >= 0.0)) throw std::invalid_argument("occupation_evolution: occupations must be >= 0");
    if (!(gamma >= 0.0)) throw std::invalid_argument("occupation_evolution: gamma must be >= 0");
    validate_time(t);
    return std::exp(-gamma * t) * n0 - std::expm1(-gamma * t) * n_th;
}

MetricTrajectory metric_trajectory(const DecoherenceInputs& in, double n0, double n_th,
                                   const std::vector<double>& t_grid) {
    validate(in);
    MetricTrajectory out;
    out.t = t_grid;
    out.mu.reserve(t_grid.size());
    out.tau.reserve(t_grid.size());
    out.r.reserve(t_grid.size());
    out.n.reserve(t_grid.size());
    for (double t : t_grid) {
        out.mu.push_back(purity_evolution(in, t));
        out.tau.push_back(nonclassical_depth_evolution(in, t));
        out.r.push_back(squeezing_evolution(in, t));
        out.n.push_back(occupation_evolution(n0, n_th, in.gamma, t));
    }
    out.t_min = purity_minimum_time(in);
    out.t_tau0 = classicality_time(in);
    out.mu_inf = in.mu_inf;
    return out;
}

}  // namespace becdeco
