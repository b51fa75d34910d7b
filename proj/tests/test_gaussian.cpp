#include "becdeco/gaussian.hpp"

#include <doctest.h>

#include <random>

using namespace becdeco;

TEST_CASE("vacuum and thermal states") {
    const auto vac = state_from_params<double>(1.0, 0.0, 0.0);
    CHECK(vac.purity() == doctest::Approx(1.0));
    CHECK(vac.occupation() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(vac.symplectic_spectrum()(0) == doctest::Approx(0.5));

    const auto th = thermal_state<double>(2.0);
    CHECK(th.purity() == doctest::Approx(0.2));
    CHECK(th.occupation() == doctest::Approx(2.0));
}

TEST_CASE("squeezed vacuum occupation is sinh^2 r") {
    // At r = 10 the anti-squeezed variance is ~1e16 times the squeezed one, so only
    // axis-aligned phases keep the small eigenvalue representable in double.
    for (double r : {0.1, 1.0, 3.0, 10.0}) {
        const auto s = state_from_params<double>(1.0, r, r < 5.0 ? 0.7 : 0.0);
        CHECK(s.occupation() == doctest::Approx(std::sinh(r) * std::sinh(r)).epsilon(1e-12));
        CHECK(s.purity() == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("params round trip over random draws") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> mu_d(0.05, 1.0), r_d(0.01, 3.0), psi_d(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 500; ++i) {
        const double mu = mu_d(rng), r = r_d(rng), psi = psi_d(rng);
        const auto p = params_from_state(state_from_params(mu, r, psi));
        CHECK(p.mu == doctest::Approx(mu).epsilon(1e-10));
        CHECK(p.r == doctest::Approx(r).epsilon(1e-10));
        CHECK(std::remainder(p.psi - psi, 2.0 * std::numbers::pi) == doctest::Approx(0.0).epsilon(1e-8));
    }
}

TEST_CASE("physical content does not depend on kappa") {
    for (double kappa : {0.5, 1.0 / std::sqrt(2.0), 1.0, 2.0}) {
        const SymplecticConvention<double> conv(kappa);
        Vector<double> d(2);
        d << 0.3 / kappa, -0.2 / kappa;  // same ⟨b⟩ in every convention
        const auto s = state_from_params(0.6, 0.8, 1.1, d, conv);
        const auto p = params_from_state(s);
        CHECK(s.purity() == doctest::Approx(0.6));
        CHECK(p.r == doctest::Approx(0.8));
        CHECK(p.psi == doctest::Approx(1.1));
        const double n_expected = (1.0 / 0.6) * std::cosh(1.6) / 2.0 - 0.5 + 0.13;
        CHECK(s.occupation() == doctest::Approx(n_expected));
    }
}

TEST_CASE("validation rejects unphysical or malformed input") {
    Matrix<double> below = 0.4 * Matrix<double>::Identity(2, 2);
    CHECK_THROWS_AS(GaussianState<double>(Vector<double>::Zero(2), below), std::domain_error);
    Matrix<double> asym(2, 2);
    asym << 1.0, 0.2, 0.1, 1.0;
    CHECK_THROWS_AS(GaussianState<double>(Vector<double>::Zero(2), asym), std::invalid_argument);
    CHECK_THROWS_AS(GaussianState<double>(Vector<double>::Zero(3), Matrix<double>::Identity(3, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(state_from_params<double>(1.2, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(state_from_params<double>(1.0, -0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SymplecticConvention<double>(0.0), std::invalid_argument);
    // A deficit inside the 1e-9 slack is accepted as rounding.
    CHECK_NOTHROW(GaussianState<double>(Vector<double>::Zero(2), 0.5 * (1.0 - 1e-12) * Matrix<double>::Identity(2, 2)));
}

TEST_CASE("two-mode symplectic spectrum") {
    // Two-mode squeezed thermal state: spectrum equals the local thermal values.
    const double r = 0.9, nu = 1.5;
    Matrix<double> s = Matrix<double>::Zero(4, 4);
    const double c = nu * std::cosh(2 * r), sh = nu * std::sinh(2 * r);
    s.diagonal().setConstant(c);
    s(0, 2) = s(2, 0) = sh;
    s(1, 3) = s(3, 1) = -sh;
    const auto spec = symplectic_eigenvalues<double>(s);
    CHECK(spec(0) == doctest::Approx(nu));
    CHECK(spec(1) == doctest::Approx(nu));
    const GaussianState<double> st(Vector<double>::Zero(4), s);
    CHECK(st.purity() == doctest::Approx(1.0 / (4 * nu * nu)));
}

TEST_CASE("nonclassical depth") {
    CHECK(nonclassical_depth<double>({1.0, 0.0, 0.0, 0.0}) == 0.0);
    CHECK(nonclassical_depth<double>({1.0, 1.0, 0.0, 0.0}) == doctest::Approx(0.5 * (1.0 - std::exp(-2.0))));
    CHECK(nonclassical_depth<double>({0.1, 0.5, 0.0, 0.0}) == 0.0);
}

TEST_CASE_TEMPLATE("other scalar types", Scalar, float, long double) {
    const auto s = state_from_params<Scalar>(Scalar(0.5), Scalar(0.4), Scalar(0.3));
    const auto p = params_from_state(s);
    CHECK(static_cast<double>(p.mu) == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(static_cast<double>(p.r) == doctest::Approx(0.4).epsilon(1e-5));
}
