#include "becdeco/decoherence.hpp"
#include "becdeco/fock_oracle.hpp"
#include "becdeco/lyapunov.hpp"

#include <doctest.h>

#include <numbers>

using namespace becdeco;

namespace {
std::vector<double> grid(double t_end, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = t_end * i / (n - 1);
    return g;
}
}  // namespace

TEST_CASE("number-basis states") {
    const auto sq = squeezed_vacuum_fock(0.5, 40);
    CHECK(sq.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(sq(1)) == 0.0);
    const auto s = measure(TruncatedDensityMatrix::from_pure(sq), 0.0, 1.0 / std::sqrt(2.0));
    CHECK(s.occupation == doctest::Approx(std::sinh(0.5) * std::sinh(0.5)).epsilon(1e-10));
    // x₁ is the squeezed quadrature: ψ = π in the Williamson form.
    const auto g = state_from_params<double>(1.0, 0.5, std::numbers::pi);
    CHECK((s.sigma - Eigen::Matrix2d(g.covariance())).cwiseAbs().maxCoeff() < 1e-10);
    CHECK_THROWS_AS(squeezed_vacuum_fock(2.0, 10), CutoffError);

    const std::complex<double> alpha(0.6, -0.3);
    const auto coh = measure(TruncatedDensityMatrix::from_pure(coherent_state_fock(alpha, 30)), 0.0, 1.0);
    CHECK(coh.d(0) == doctest::Approx(0.6));
    CHECK(coh.d(1) == doctest::Approx(-0.3));
    CHECK(coh.sigma(0, 0) == doctest::Approx(0.25));
}

TEST_CASE("unitary evolution keeps purity and occupation") {
    const auto rho0 = TruncatedDensityMatrix::from_pure(squeezed_vacuum_fock(0.4, 30));
    const auto out = lindblad_step_integrate(rho0, {2.0, 0.0, 0.0}, grid(3.0, 7));
    for (const auto& s : out) {
        CHECK(s.purity == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(s.trace == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(s.occupation == doctest::Approx(out.front().occupation).epsilon(1e-9));
    }
}

TEST_CASE("thermal state is stationary") {
    const double n = 0.3;
    const int dim = 31;
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) rho(k, k) = std::pow(n / (1 + n), k) / (1 + n);
    rho /= rho.trace();
    const auto out = lindblad_step_integrate({rho}, {1.0, 1.0 + n, n}, grid(4.0, 5));
    for (const auto& s : out) {
        CHECK(s.occupation == doctest::Approx(n).epsilon(1e-8));
        CHECK(s.purity == doctest::Approx(1.0 / (1.0 + 2.0 * n)).epsilon(1e-8));
    }
}

TEST_CASE("Gaussianity and agreement with the closed form") {
    const double gamma = 1.0, n_th = 0.2, r0 = 0.5;
    const auto rho0 = TruncatedDensityMatrix::from_pure(squeezed_vacuum_fock(r0, 40));
    std::vector<TruncatedDensityMatrix> states;
    const auto g = grid(5.0, 11);
    const auto out = lindblad_step_integrate(rho0, {1.0, gamma * (1 + n_th), gamma * n_th}, g, {}, &states);
    const auto s0 = state_from_params<double>(1.0, r0, std::numbers::pi);
    const auto ch = thermal_channel<double>(gamma, n_th, 1.0);
    const DecoherenceInputs in{1.0, r0, asymptotic_purity(n_th), gamma};
    REQUIRE(states.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(max_third_central_moment(states[i], 1.0 / std::sqrt(2.0)) < 1e-6);
        CHECK(out[i].purity == doctest::Approx(purity_evolution(in, g[i])).epsilon(1e-6));
        const auto ex = evolve_closed_form(s0, ch, g[i]);
        CHECK((out[i].sigma - Eigen::Matrix2d(ex.covariance())).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("cutoff guards") {
    // Strong heating pushes population to the top of a small basis.
    const auto rho0 = TruncatedDensityMatrix::from_pure(squeezed_vacuum_fock(0.0, 8));
    CHECK_THROWS_AS(lindblad_step_integrate(rho0, {0.0, 1.0, 5.0}, grid(5.0, 3)), CutoffError);
    Eigen::VectorXcd high = Eigen::VectorXcd::Zero(13);
    high(11) = 1.0;
    CHECK_THROWS_AS(lindblad_step_integrate(TruncatedDensityMatrix::from_pure(high), {0.0, 1.0, 0.0}, grid(1.0, 2)),
                    CutoffError);
    CHECK_THROWS_AS(coherent_state_fock({2.5, 0.0}, 12), CutoffError);
}
