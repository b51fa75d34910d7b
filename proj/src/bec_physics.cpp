#include "becdeco/bec_physics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace becdeco {

namespace {

void require_positive(double x, const char* what) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::invalid_argument(std::string("CondensateParams: ") + what + " must be positive and finite");
    }
}

double coupling_of(double mass, double a) {
    return 4.0 * constants::pi * constants::hbar * constants::hbar * a / mass;
}

}  // namespace

CondensateParams::CondensateParams(double mass, double a, double c_s, double n, double t,
                                   std::optional<double> v)
    : mass_(mass), scattering_length_(a), speed_of_sound_(c_s), density_(n), temperature_(t), volume_(v) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
        throw std::invalid_argument("CondensateParams: temperature must be finite and non-negative");
    }
    if (v) require_positive(*v, "volume");
}

CondensateParams CondensateParams::from_speed_of_sound(double mass, double scattering_length,
                                                       double speed_of_sound, double temperature,
                                                       std::optional<double> volume) {
    require_positive(mass, "mass");
    require_positive(scattering_length, "scattering length");
    require_positive(speed_of_sound, "speed of sound");
    const double n = mass * speed_of_sound * speed_of_sound / coupling_of(mass, scattering_length);
    return {mass, scattering_length, speed_of_sound, n, temperature, volume};
}

CondensateParams CondensateParams::from_density(double mass, double scattering_length, double density,
                                                double temperature, std::optional<double> volume) {
    require_positive(mass, "mass");
    require_positive(scattering_length, "scattering length");
    require_positive(density, "density");
    const double c_s = std::sqrt(coupling_of(mass, scattering_length) * density / mass);
    return {mass, scattering_length, c_s, density, temperature, volume};
}

CondensateParams CondensateParams::from_species(const constants::Species& species, double speed_of_sound,
                                                double temperature) {
    return from_speed_of_sound(species.mass, species.scattering_length, speed_of_sound, temperature);
}

double CondensateParams::coupling() const { return coupling_of(mass_, scattering_length_); }

double CondensateParams::chemical_potential() const { return mass_ * speed_of_sound_ * speed_of_sound_; }

CondensateParams CondensateParams::with_temperature(double temperature) const {
    return {mass_, scattering_length_, speed_of_sound_, density_, temperature, volume_};
}

double dispersion(double k, const CondensateParams& p) {
    if (!(k > 0.0)) throw std::invalid_argument("dispersion: wavenumber must be positive");
    const double phonon = p.speed_of_sound() * k;
    const double free = constants::hbar * k * k / (2.0 * p.mass());
    return std::hypot(phonon, free);
}

double invert_dispersion(double omega, const CondensateParams& p) {
    if (!(omega > 0.0)) throw std::invalid_argument("invert_dispersion: frequency must be positive");
    // k² = 2ω² / (c² + √(c⁴ + (ħω/m)²)), the cancellation-free form of the root.
    const double c2 = p.speed_of_sound() * p.speed_of_sound();
    const double w = constants::hbar * omega / p.mass();
    return std::sqrt(2.0 * omega * omega / (c2 + std::sqrt(c2 * c2 + w * w)));
}

BogoliubovMode bogoliubov_mode(double k, const CondensateParams& p) {
    const double omega = dispersion(k, p);
    const double hw = constants::hbar * omega;
    const double mu = p.chemical_potential();
    const double e = constants::hbar * constants::hbar * k * k / (2.0 * p.mass()) + mu;
    // e² − (ħω)² = μ², so e − ħω = μ²/(e + ħω) without cancellation.
    const double u = std::sqrt((e + hw) / (2.0 * hw));
    const double v = -std::sqrt(mu * mu / (e + hw) / (2.0 * hw));
    return {k, omega, u, v};
}

double inverse_temperature_ratio(double omega, double temperature) {
    if (temperature == 0.0) return std::numeric_limits<double>::infinity();
    return constants::hbar * omega / (constants::boltzmann * temperature);
}

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0)) throw std::invalid_argument("thermal_occupation: frequency must be positive");
    if (!(temperature >= 0.0)) throw std::invalid_argument("thermal_occupation: temperature must be non-negative");
    if (temperature == 0.0) return 0.0;
    return 1.0 / std::expm1(inverse_temperature_ratio(omega, temperature));
}

}  // namespace becdeco
