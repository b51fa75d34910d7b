#include "becdeco/three_body.hpp"

#include <cmath>
#include <stdexcept>

namespace becdeco {

namespace {
void validate(const ThreeBodyParams& p) {
    if (!(p.L3 > 0.0) || !std::isfinite(p.L3)) throw std::invalid_argument("three-body: L3 must be positive");
    if (!(p.n0 > 0.0) || !std::isfinite(p.n0)) throw std::invalid_argument("three-body: n0 must be positive");
}
}  // namespace

double density_decay(const ThreeBodyParams& p, double t) {
    validate(p);
    if (!(t >= 0.0)) throw std::invalid_argument("density_decay: time must be non-negative");
    return p.n0 / std::sqrt(1.0 + 2.0 * p.L3 * p.n0 * p.n0 * t);
}

double three_body_rate(const ThreeBodyParams& p, double t) {
    const double n = density_decay(p, t);
    return p.L3 * n * n;
}

double half_life(const ThreeBodyParams& p) {
    validate(p);
    return 3.0 / (2.0 * p.L3 * p.n0 * p.n0);
}

}  // namespace becdeco
