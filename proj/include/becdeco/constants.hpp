// CODATA 2018 physical constants and atomic species presets (SI)

#pragma once

#include <string_view>

namespace becdeco::constants {

inline constexpr double pi = 3.141592653589793238462643383279502884;

inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double boltzmann = 1.380649e-23;        // J / K
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
inline constexpr double bohr_radius = 5.29177210903e-11;       // m

struct Species {
    std::string_view name;
    double mass;               // kg
    double scattering_length;  // m
};

// 87Rb: a = 5.31 nm (about 100 a0) reproduces the 0.73 1/s Beliaev rate of the
// reference scenario at c_s = 3.4 mm/s.
inline constexpr Species rubidium87{"rb87", 86.909180527 * atomic_mass_unit, 5.31e-9};
inline constexpr Species ytterbium174{"yb174", 173.938866 * atomic_mass_unit, 5.55e-9};

// Three-body loss constant for 87Rb in |F=1, m_F=-1>, with its 1-sigma band.
inline constexpr double rb87_three_body_L3 = 5.8e-42;        // m^6 / s
inline constexpr double rb87_three_body_L3_sigma = 1.9e-42;  // m^6 / s

}  // namespace becdeco::constants
