// Condensate loss by three-body recombination, dρ/dt = −Lρ³

#pragma once

#include "becdeco/constants.hpp"

namespace becdeco {

struct ThreeBodyParams {
    double L3 = constants::rb87_three_body_L3;  // m^6/s
    double n0;                                   // m^-3
};

// ρ(t) = ρ₀ / √(1 + 2Lρ₀²t)
double density_decay(const ThreeBodyParams& p, double t);
// γ(t) = Lρ(t)², the instantaneous first-order loss rate.
double three_body_rate(const ThreeBodyParams& p, double t);
// 3 / (2 L ρ₀²); the density is exactly halved there.
double half_life(const ThreeBodyParams& p);

}  // namespace becdeco
