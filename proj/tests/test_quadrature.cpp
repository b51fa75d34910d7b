#include "becdeco/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <numbers>

using namespace becdeco;

TEST_CASE("smooth integrands") {
    CHECK(integrate_adaptive([](double x) { return std::sin(x); }, 0.0, std::numbers::pi).value ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate_adaptive([](double x) { return std::exp(-x * x); }, -10.0, 10.0).value ==
          doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-10));
}

TEST_CASE("endpoint singularity and narrow peak") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-9;
    CHECK(integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg).value ==
          doctest::Approx(2.0).epsilon(1e-8));
    const double w = 1e-4;
    const auto r = integrate_adaptive([w](double x) { return w / (x * x + w * w); }, -1.0, 1.0, cfg);
    CHECK(r.value == doctest::Approx(2.0 * std::atan(1.0 / w)).epsilon(1e-8));
    CHECK(r.subdivisions > 1);
}

TEST_CASE("failure modes") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-14;
    cfg.max_subdivisions = 2;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg), QuadratureError);
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0.0, INFINITY), std::invalid_argument);
    QuadratureConfig none;
    none.rel_tol = 0.0;
    CHECK_THROWS_AS(integrate_adaptive([](double x) { return x; }, 0.0, 1.0, none), std::invalid_argument);
    CHECK(integrate_adaptive([](double x) { return x; }, 1.0, 1.0).value == 0.0);
}
