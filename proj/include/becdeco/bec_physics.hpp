// Uniform-condensate microphysics in SI units:
// coupling constant, sound speed / density duality, Bogoliubov dispersion and
// coefficients, Bose-Einstein occupation.

#pragma once

#include "becdeco/constants.hpp"

#include <optional>

namespace becdeco {

class CondensateParams {
public:
    static CondensateParams from_speed_of_sound(double mass, double scattering_length,
                                                double speed_of_sound, double temperature,
                                                std::optional<double> volume = std::nullopt);
    static CondensateParams from_density(double mass, double scattering_length, double density,
                                         double temperature,
                                         std::optional<double> volume = std::nullopt);
    static CondensateParams from_species(const constants::Species& species, double speed_of_sound,
                                         double temperature);

    double mass() const { return mass_; }
    double scattering_length() const { return scattering_length_; }
    double speed_of_sound() const { return speed_of_sound_; }
    double density() const { return density_; }
    double temperature() const { return temperature_; }
    std::optional<double> volume() const { return volume_; }

    // g = 4πħ²a/m
    double coupling() const;
    // μ = g n = m c_s²
    double chemical_potential() const;

    CondensateParams with_temperature(double temperature) const;

private:
    CondensateParams(double mass, double a, double c_s, double n, double t, std::optional<double> v);

    double mass_;
    double scattering_length_;
    double speed_of_sound_;
    double density_;
    double temperature_;
    std::optional<double> volume_;
};

struct BogoliubovMode {
    double k;      // 1/m
    double omega;  // rad/s
    double u;
    double v;
};

// ω = √((c_s k)² + (ħk²/2m)²)
double dispersion(double k, const CondensateParams& params);
// Closed-form positive root of the quadratic in k².
double invert_dispersion(double omega, const CondensateParams& params);
// u > 0, v ≤ 0 with u² − v² = 1.
BogoliubovMode bogoliubov_mode(double k, const CondensateParams& params);
// 1/(e^{ħω/k_BT} − 1); exactly 0 at T = 0.
double thermal_occupation(double omega, double temperature);
// ħω / k_BT; +inf at T = 0.
double inverse_temperature_ratio(double omega, double temperature);

}  // namespace becdeco
