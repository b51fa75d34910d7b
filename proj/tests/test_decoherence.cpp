#include "becdeco/decoherence.hpp"
#include "becdeco/lyapunov.hpp"

#include <doctest.h>

#include <cmath>

using namespace becdeco;

TEST_CASE("purity minimum of a strongly squeezed vacuum at zero temperature") {
    const DecoherenceInputs in{1.0, 10.0, 1.0, 0.7396524853};
    const auto t_min = purity_minimum_time(in);
    REQUIRE(t_min);
    CHECK(*t_min == doctest::Approx(0.9371254668).epsilon(1e-9));
    CHECK(*t_min == doctest::Approx(std::log(2.0) / in.gamma).epsilon(1e-8));
    // It really is a minimum.
    const double mu_min = purity_evolution(in, *t_min);
    CHECK(purity_evolution(in, 0.99 * *t_min) > mu_min);
    CHECK(purity_evolution(in, 1.01 * *t_min) > mu_min);
}

TEST_CASE("no interior minimum without squeezing") {
    CHECK_FALSE(purity_minimum_time({1.0, 0.0, 1.0, 1.0}));
    CHECK_FALSE(purity_minimum_time({0.5, 0.0, 0.9, 1.0}));
    CHECK_FALSE(purity_minimum_time({1.0, 2.0, 1.0, 0.0}));
}

TEST_CASE("classicality time") {
    const DecoherenceInputs in{1.0, 1.0, 0.9, 1.0};
    const double t0 = classicality_time(in);
    CHECK(t0 == doctest::Approx(2.172702174).epsilon(1e-9));
    CHECK(nonclassical_depth_evolution(in, t0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(nonclassical_depth_evolution(in, 0.9 * t0) > 0.0);
    CHECK(nonclassical_depth_evolution(in, 1.1 * t0) == 0.0);
    CHECK(std::isinf(classicality_time({1.0, 1.0, 1.0, 1.0})));
    CHECK(classicality_time({0.2, 0.1, 0.9, 1.0}) == 0.0);
}

TEST_CASE("frozen metrics at zero rate") {
    const DecoherenceInputs in{0.7, 0.5, 0.9, 0.0};
    for (double t : {0.0, 1.0, 100.0}) {
        CHECK(purity_evolution(in, t) == doctest::Approx(0.7));
        CHECK(squeezing_evolution(in, t) == doctest::Approx(0.5));
        CHECK(occupation_evolution(3.0, 0.1, 0.0, t) == doctest::Approx(3.0));
    }
}

TEST_CASE("metrics agree with the evolved covariance") {
    const double gamma = 0.6, n_th = 0.35, r0 = 1.2, mu0 = 0.8;
    const double mu_inf = asymptotic_purity(n_th);
    const DecoherenceInputs in{mu0, r0, mu_inf, gamma};
    const auto s0 = state_from_params<double>(mu0, r0, 0.4);
    const auto ch = thermal_channel<double>(gamma, n_th, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double t = 0.05 * i;
        const auto p = params_from_state(evolve_closed_form(s0, ch, t));
        CHECK(p.mu == doctest::Approx(purity_evolution(in, t)).epsilon(1e-10));
        CHECK(p.r == doctest::Approx(squeezing_evolution(in, t)).epsilon(1e-8));
        CHECK(nonclassical_depth(p) == doctest::Approx(nonclassical_depth_evolution(in, t)).epsilon(1e-9));
        CHECK(p.N == doctest::Approx(occupation_evolution(s0.occupation(), n_th, gamma, t)).epsilon(1e-10));
    }
}

TEST_CASE("trajectory bundle") {
    const DecoherenceInputs in{1.0, 10.0, 1.0, 0.74};
    const auto traj = metric_trajectory(in, std::sinh(10.0) * std::sinh(10.0), 0.0, {0.0, 1.0, 2.0});
    CHECK(traj.n.front() == doctest::Approx(1.212912984e8).epsilon(1e-9));
    CHECK(traj.mu.front() == doctest::Approx(1.0));
    CHECK(traj.t_min);
    CHECK(std::isinf(traj.t_tau0));
    CHECK_THROWS_AS(purity_evolution({1.5, 0.0, 1.0, 1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(purity_evolution({1.0, 0.0, 1.0, 1.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(purity_evolution({1.0, 0.0, 1.0, -1.0}, 0.0), std::invalid_argument);
}
