#include "becdeco/damping.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace becdeco {

namespace {

using constants::boltzmann;
using constants::hbar;
using constants::pi;

constexpr double kQuantumRatio = 0.3;
constexpr double kStrongRatio = 3.0;
// Landau integrals stop where the thermal factor drops below 1e-12.
constexpr double kThermalCutoff = 27.631021115928547;  // ln(1 + 1e12)

struct UV {
    double u, v;
};

// Branch quantities in units of m c_s/ħ (wavenumber) and m c_s²/ħ (frequency).
double eps_of(double x) { return x * std::sqrt(1.0 + 0.25 * x * x); }
double deps_dx(double x) { return (1.0 + 0.5 * x * x) / std::sqrt(1.0 + 0.25 * x * x); }
double x_of(double eps) { return std::sqrt(2.0 * eps * eps / (1.0 + std::sqrt(1.0 + eps * eps))); }
UV uv_of(double x) {
    const double w = eps_of(x);
    const double e = 0.5 * x * x + 1.0;
    return {std::sqrt((e + w) / (2.0 * w)), -std::sqrt(1.0 / ((e + w) * 2.0 * w))};
}

double beliaev_factor(UV q, UV k, UV l) {
    return q.u * (k.u * l.u + k.v * l.u + k.u * l.v) + q.v * (k.v * l.v + k.v * l.u + k.u * l.v);
}
double landau_factor(UV q, UV k, UV l) {
    return 2.0 * (q.u * (k.v * l.u + k.u * l.u + k.v * l.v) + q.v * (k.u * l.v + k.u * l.u + k.v * l.v));
}
double absorption_factor(UV q, UV k, UV l) {
    return q.u * (k.v * l.v + k.u * l.v + k.v * l.u) + q.v * (k.u * l.v + k.v * l.u + k.u * l.u);
}

// 3D continuum density of states per unit volume, k²/(2π²)·dk/dω, dimensionless.
double density_of_states(double x) { return x * x / (2.0 * pi * pi * deps_dx(x)); }

// Angular average of the energy delta once the partner wavenumber y is fixed by
// energy conservation: ½∫d(cosθ) δ(...) = y/(2 x x_q ε′(y)).
double angular_delta(double x, double x_q, double y) { return y / (2.0 * x * x_q * deps_dx(y)); }

double occupation(double eps, double theta) {
    if (theta == 0.0) return 0.0;
    return 1.0 / std::expm1(eps / theta);
}

void require_frequency(double omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::invalid_argument("damping: mode frequency must be positive and finite");
    }
}

}  // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::quantum: return "quantum";
        case Regime::thermal_high: return "thermal_high";
        case Regime::thermal_low: return "thermal_low";
        case Regime::integral: return "integral";
    }
    return "unknown";
}

InteractionCoefficients vertex_coefficients(double q, double k, double k_prime, const CondensateParams& p) {
    if (!(q > 0.0 && k > 0.0 && k_prime > 0.0)) {
        throw std::invalid_argument("vertex_coefficients: wavenumbers must be positive");
    }
    const auto mq = bogoliubov_mode(q, p);
    const auto mk = bogoliubov_mode(k, p);
    const auto ml = bogoliubov_mode(k_prime, p);
    const UV uq{mq.u, mq.v}, uk{mk.u, mk.v}, ul{ml.u, ml.v};
    return {absorption_factor(uq, uk, ul), beliaev_factor(uq, uk, ul), landau_factor(uq, uk, ul)};
}

RateEstimate gamma_beliaev_asymptotic(double omega_q, const CondensateParams& p) {
    require_frequency(omega_q);
    const double ratio = boltzmann * p.temperature() / (hbar * omega_q);
    const double c5 = std::pow(p.speed_of_sound(), 5);
    const double rate = 3.0 / (640.0 * pi) * hbar * std::pow(omega_q, 5) / (p.mass() * p.density() * c5) *
                        (1.0 + ratio * ratio * ratio);
    return {rate, ratio < kQuantumRatio};
}

RateEstimate gamma_landau_high_temperature(double omega_q, const CondensateParams& p) {
    require_frequency(omega_q);
    const double kt = boltzmann * p.temperature();
    const double mu = p.chemical_potential();
    const double rate = 3.0 * pi / 8.0 * kt * p.scattering_length() / (hbar * p.speed_of_sound()) * omega_q;
    return {rate, kt > kStrongRatio * mu && mu > kStrongRatio * hbar * omega_q};
}

RateEstimate gamma_landau_low_temperature(double omega_q, const CondensateParams& p) {
    require_frequency(omega_q);
    const double kt = boltzmann * p.temperature();
    const double mu = p.chemical_potential();
    const double rate = 3.0 * pi * pi * pi / 40.0 * std::pow(kt, 4) * omega_q /
                        (p.mass() * p.density() * std::pow(hbar, 3) * std::pow(p.speed_of_sound(), 5));
    return {rate, mu > kStrongRatio * kt && kt > kStrongRatio * hbar * omega_q};
}

IntegralRates gamma_integral(double omega_q, const CondensateParams& p, const QuadratureConfig& cfg) {
    require_frequency(omega_q);
    const double mc2 = p.chemical_potential();
    const double eps_q = hbar * omega_q / mc2;
    const double x_q = x_of(eps_q);
    const double theta = boltzmann * p.temperature() / mc2;
    const UV uq = uv_of(x_q);
    // (2g²n/ħ²)·π in branch units; g²n = m²c⁴/n.
    const double c = p.speed_of_sound();
    const double beliaev_prefactor = 2.0 * pi * std::pow(p.mass(), 4) * std::pow(c, 5) /
                                     (p.density() * std::pow(hbar, 4));
    const double landau_prefactor = 0.5 * beliaev_prefactor;

    enum class Part { net, down, up };
    const auto beliaev = [&](Part part) {
        return [&, part](double eps_k) {
            if (eps_k <= 0.0 || eps_k >= eps_q) return 0.0;
            const double x = x_of(eps_k);
            const double eps_l = eps_q - eps_k;
            const double y = x_of(eps_l);
            // Decay is kinematically allowed only for |q − k| ≤ l ≤ q + k.
            if (y < std::abs(x_q - x) || y > x_q + x) return 0.0;
            const double b = beliaev_factor(uq, uv_of(x), uv_of(y));
            const double nk = occupation(eps_k, theta);
            const double nl = occupation(eps_l, theta);
            const double thermal = part == Part::net    ? 1.0 + nk + nl
                                   : part == Part::down ? (1.0 + nk) * (1.0 + nl)
                                                        : nk * nl;
            return density_of_states(x) * angular_delta(x, x_q, y) * b * b * thermal;
        };
    };
    const auto landau = [&](Part part) {
        return [&, part](double eps_k) {
            if (eps_k <= 0.0) return 0.0;
            const double x = x_of(eps_k);
            const double eps_l = eps_q + eps_k;
            const double y = x_of(eps_l);
            if (y < std::abs(x - x_q) || y > x_q + x) return 0.0;
            const double l = landau_factor(uq, uv_of(x), uv_of(y));
            const double nk = occupation(eps_k, theta);
            const double nl = occupation(eps_l, theta);
            const double thermal = part == Part::net    ? nk - nl
                                   : part == Part::down ? nk * (1.0 + nl)
                                                        : nl * (1.0 + nk);
            return density_of_states(x) * angular_delta(x, x_q, y) * l * l * thermal;
        };
    };

    // Piecewise over natural scales of the integrand; errors add.
    const auto integrate_pieces = [&](const std::function<double(double)>& f, std::vector<double> cuts) {
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        QuadratureResult total;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
            const auto part = integrate_adaptive(f, cuts[i], cuts[i + 1], cfg);
            total.value += part.value;
            total.error += part.error;
        }
        return total;
    };

    const std::vector<double> beliaev_cuts{0.0, 0.5 * eps_q, eps_q};
    const auto b_net = integrate_pieces(beliaev(Part::net), beliaev_cuts);

    IntegralRates out{};
    out.gamma_B = beliaev_prefactor * b_net.value;
    out.error_B = beliaev_prefactor * b_net.error;

    double b_down = b_net.value;
    double b_up = 0.0;
    double l_down = 0.0;
    double l_up = 0.0;
    if (theta > 0.0) {
        b_down = integrate_pieces(beliaev(Part::down), beliaev_cuts).value;
        b_up = integrate_pieces(beliaev(Part::up), beliaev_cuts).value;
        const double cutoff = kThermalCutoff * theta;
        std::vector<double> landau_cuts{0.0, cutoff};
        if (eps_q < cutoff) landau_cuts.push_back(eps_q);
        if (theta < cutoff) landau_cuts.push_back(theta);
        const auto l_net = integrate_pieces(landau(Part::net), landau_cuts);
        out.gamma_L = landau_prefactor * l_net.value;
        out.error_L = landau_prefactor * l_net.error;
        l_down = integrate_pieces(landau(Part::down), landau_cuts).value;
        l_up = integrate_pieces(landau(Part::up), landau_cuts).value;
    }
    out.gamma_1 = beliaev_prefactor * b_down + landau_prefactor * l_down;
    out.gamma_2 = beliaev_prefactor * b_up + landau_prefactor * l_up;
    return out;
}

DampingResult split_rates(double gamma, double gamma_B, double gamma_L, double omega_q, double temperature,
                          Regime regime, bool regime_valid) {
    const double n_th = thermal_occupation(omega_q, temperature);
    DampingResult r{};
    r.gamma = gamma;
    r.gamma_B = gamma_B;
    r.gamma_L = gamma_L;
    r.n_th = n_th;
    r.beta_q = inverse_temperature_ratio(omega_q, temperature);
    r.gamma_1 = gamma * (1.0 + n_th);
    r.gamma_2 = gamma * n_th;
    r.gamma_T = gamma * (1.0 + 2.0 * n_th);
    r.regime = regime;
    r.regime_valid = regime_valid;
    return r;
}

DampingResult select_regime(double omega_q, const CondensateParams& p, const QuadratureConfig& cfg) {
    const double t = p.temperature();
    const auto beliaev = gamma_beliaev_asymptotic(omega_q, p);
    if (beliaev.regime_valid) {
        return split_rates(beliaev.rate, beliaev.rate, 0.0, omega_q, t, Regime::quantum);
    }
    const auto high = gamma_landau_high_temperature(omega_q, p);
    if (high.regime_valid) {
        return split_rates(high.rate, 0.0, high.rate, omega_q, t, Regime::thermal_high);
    }
    const auto low = gamma_landau_low_temperature(omega_q, p);
    if (low.regime_valid) {
        return split_rates(low.rate, 0.0, low.rate, omega_q, t, Regime::thermal_low);
    }
    const auto rates = gamma_integral(omega_q, p, cfg);
    return split_rates(rates.gamma_B + rates.gamma_L, rates.gamma_B, rates.gamma_L, omega_q, t, Regime::integral);
}

DampingResult asymptotic_damping(double omega_q, const CondensateParams& p) {
    const double t = p.temperature();
    const double kt = boltzmann * t;
    const double hw = hbar * omega_q;
    if (kt < hw) {
        const auto b = gamma_beliaev_asymptotic(omega_q, p);
        return split_rates(b.rate, b.rate, 0.0, omega_q, t, Regime::quantum, b.regime_valid);
    }
    if (kt > p.chemical_potential()) {
        const auto h = gamma_landau_high_temperature(omega_q, p);
        return split_rates(h.rate, 0.0, h.rate, omega_q, t, Regime::thermal_high, h.regime_valid);
    }
    const auto l = gamma_landau_low_temperature(omega_q, p);
    return split_rates(l.rate, 0.0, l.rate, omega_q, t, Regime::thermal_low, l.regime_valid);
}

}  // namespace becdeco
