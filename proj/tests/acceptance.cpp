// Acceptance run: one PASS/FAIL line per criterion, exit code 1 if any fails.

#include "becdeco/damping.hpp"
#include "becdeco/decoherence.hpp"
#include "becdeco/fock_oracle.hpp"
#include "becdeco/lyapunov.hpp"
#include "becdeco/scenario.hpp"
#include "becdeco/three_body.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

using namespace becdeco;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s: %s\n", pass ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    if (!pass) ++failures;
}

// Best wall time over a few repetitions, in seconds.
double best_time(const std::function<void()>& f, int reps = 5) {
    double best = INFINITY;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
    return buf;
}

const CondensateParams reference = CondensateParams::from_species(constants::rubidium87, 3.4e-3, 0.5e-9);
constexpr double reference_omega = 1e4;

void beliaev_rate() {
    DampingResult d{};
    const double secs = best_time([&] { d = select_regime(reference_omega, reference); });
    const bool pass = std::abs(d.gamma_B / 0.73 - 1.0) <= 0.05 && d.regime == Regime::quantum && secs < 1e-3;
    report(1, "Beliaev rate", pass,
           fmt("n = %.4g m^-3, gamma_B = %.6g 1/s (target 0.73 +- 5%%), %.1f us", reference.density(), d.gamma_B,
               secs * 1e6));
}

void decoherence_time() {
    std::optional<double> t_min;
    const double secs = best_time([&] {
        const auto d = select_regime(reference_omega, reference);
        t_min = purity_minimum_time({1.0, 10.0, asymptotic_purity(d.n_th), d.gamma});
    });
    const bool pass = t_min && *t_min >= 0.8 && *t_min <= 1.1 && secs < 1e-3;
    report(2, "Purity-minimum time", pass,
           fmt("t_min = %.6g s (window 0.8-1.1 s), %.1f us", t_min.value_or(NAN), secs * 1e6));
}

void three_body() {
    double g3 = 0.0, t_half = 0.0, g_b = 0.0, t_min = 0.0;
    const double secs = best_time([&] {
        const ThreeBodyParams tb{constants::rb87_three_body_L3, reference.density()};
        g3 = three_body_rate(tb, 0.0);
        t_half = half_life(tb);
        const auto d = select_regime(reference_omega, reference);
        g_b = d.gamma_B;
        t_min = *purity_minimum_time({1.0, 10.0, asymptotic_purity(d.n_th), d.gamma});
    });
    const bool pass = g3 < g_b && t_half > 2.0 * t_min && std::abs(g3 - 0.61) < 0.01 && secs < 1e-3;
    report(3, "Three-body ordering", pass,
           fmt("gamma_3(0) = %.4g < gamma_B = %.4g 1/s; t_half = %.4g s > 2 t_min = %.4g s", g3, g_b, t_half,
               2.0 * t_min));
}

void fig1_shape() {
    auto cfg = preset("fig1");
    cfg.t_points = 500;
    const auto rep = run_trajectory(cfg);
    const auto& m = rep.metrics;
    const std::size_t n = m.t.size();

    std::size_t i_min = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (m.mu[i] < m.mu[i_min]) i_min = i;
    }
    bool mu_shape = i_min > 0 && i_min + 1 < n;
    for (std::size_t i = 1; i < n && mu_shape; ++i) {
        mu_shape = i <= i_min ? m.mu[i] <= m.mu[i - 1] : m.mu[i] >= m.mu[i - 1];
    }
    mu_shape = mu_shape && m.mu.back() < m.mu_inf;

    bool tau_ok = true, r_ok = true, n_ok = true;
    const double gamma = rep.rate.damping.gamma;
    for (std::size_t i = 1; i < n; ++i) {
        tau_ok = tau_ok && m.tau[i] <= m.tau[i - 1];
        r_ok = r_ok && m.r[i] < m.r[i - 1];
        n_ok = n_ok && std::abs(m.n[i] / (m.n.front() * std::exp(-gamma * m.t[i])) - 1.0) < 1e-12;
    }
    // At zero temperature τ only approaches its floor 0; it must track e^{−γt}.
    const double tau_floor_ratio = m.tau.back() / (m.tau.front() * std::exp(-gamma * m.t.back()));
    tau_ok = tau_ok && std::abs(tau_floor_ratio - 1.0) < 1e-3;
    const bool n0_ok = std::abs(m.n.front() / std::pow(std::sinh(10.0), 2) - 1.0) < 1e-12;

    report(4, "Trajectory shape", mu_shape && tau_ok && r_ok && n_ok && n0_ok,
           fmt("mu minimum at t = %.4g s then rising toward %.3g; tau(end) = %.3g; N(0) = %.6g", m.t[i_min], m.mu_inf,
               m.tau.back(), m.n.front()));
}

void fig2_slope() {
    auto cfg = preset("fig2");
    cfg.temperature_K = 0.0;
    SweepReport rep;
    const auto t0 = std::chrono::steady_clock::now();
    rep = run_sweep(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool monotone = true, slope_ok = true;
    double worst = 0.0;
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        const auto& a = rep.rows[i - 1];
        const auto& b = rep.rows[i];
        if (a.speed_of_sound != b.speed_of_sound) continue;
        monotone = monotone && a.t_min && b.t_min && *b.t_min < *a.t_min;
        if (!a.t_min || !b.t_min) continue;
        const double slope = std::log(*b.t_min / *a.t_min) / std::log(b.omega / a.omega);
        worst = std::max(worst, std::abs(slope + 5.0));
    }
    slope_ok = worst <= 0.05;
    bool truncation_ok = rep.truncation.size() == cfg.sweep_speeds_of_sound_m_per_s.size();
    std::string points;
    for (const auto& tp : rep.truncation) {
        truncation_ok = truncation_ok && tp.omega.has_value();
        points += fmt(" c=%.3g:%.4g", tp.speed_of_sound, tp.omega.value_or(NAN));
    }
    report(5, "Frequency sweep", monotone && slope_ok && truncation_ok && secs < 1.0,
           fmt("max |slope + 5| = %.2e, %.0f ms for %.0f points;", worst, secs * 1e3,
               static_cast<double>(rep.rows.size())) + " truncation omega [rad/s]" + points);
}

void fock_equivalence() {
    const double gamma = 1.0, n_th = 0.2, r0 = 0.5, omega = 1.0;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rho0 = TruncatedDensityMatrix::from_pure(squeezed_vacuum_fock(r0, 40));
    const auto grid = linear_grid(0.0, 5.0 / gamma, 101);
    const auto samples = lindblad_step_integrate(rho0, {omega, gamma * (1 + n_th), gamma * n_th}, grid);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const auto s0 = state_from_params<double>(1.0, r0, std::numbers::pi);
    const auto ch = thermal_channel<double>(gamma, n_th, omega);
    const DecoherenceInputs in{1.0, r0, asymptotic_purity(n_th), gamma};
    double d_mu = 0.0, d_sigma = 0.0, d_n = 0.0;
    for (const auto& s : samples) {
        d_mu = std::max(d_mu, std::abs(s.purity - purity_evolution(in, s.t)));
        const auto ex = evolve_closed_form(s0, ch, s.t);
        d_sigma = std::max(d_sigma, (s.sigma - Eigen::Matrix2d(ex.covariance())).cwiseAbs().maxCoeff());
        d_n = std::max(d_n, std::abs(s.occupation - occupation_evolution(s0.occupation(), n_th, gamma, s.t)));
    }
    const bool pass = d_mu < 1e-3 && d_sigma < 1e-3 && d_n < 1e-3 && secs < 30.0;
    report(6, "Number-basis oracle", pass,
           fmt("max dev mu = %.2e, sigma = %.2e, N = %.2e; %.2f s", d_mu, d_sigma, d_n, secs));
}

void lyapunov_numeric() {
    const double gamma = 1.0, n_th = 0.2;
    Vector<double> d(2);
    d << 0.5, -0.25;
    const auto s0 = state_from_params<double>(0.9, 0.8, 0.6, d);
    const auto ch = thermal_channel<double>(gamma, n_th, 0.0);
    const auto grid = linear_grid(0.0, 5.0 / gamma, 201);
    const auto num = evolve_numeric<double>(s0, [&](double) { return ch; }, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto ex = evolve_closed_form(s0, ch, grid[i]);
        for (Eigen::Index j = 0; j < 4; ++j) {
            worst = std::max(worst, std::abs(num[i].covariance()(j) / ex.covariance()(j) - 1.0));
        }
        for (Eigen::Index j = 0; j < 2; ++j) {
            worst = std::max(worst, std::abs(num[i].displacement()(j) / ex.displacement()(j) - 1.0));
        }
    }
    report(7, "Numerical vs closed-form moments", worst < 1e-8, fmt("max entrywise relative deviation = %.2e", worst));
}

void fixed_point() {
    const auto d = select_regime(reference_omega, reference);
    double residual = 0.0;
    for (double n_th : {0.0, 0.2, d.n_th, 10.0}) {
        const auto ch = thermal_channel<double>(d.gamma, n_th, reference_omega);
        residual = std::max(residual, lyapunov_residual(ch, ch.thermal->sigma_inf).cwiseAbs().maxCoeff() /
                                          ch.D.cwiseAbs().maxCoeff());
    }
    double balance = 0.0;
    for (double t : {1e-9, 5e-9, 2e-8, 1e-7}) {
        const auto s = split_rates(d.gamma, d.gamma, 0.0, reference_omega, t, Regime::quantum);
        balance = std::max(balance, std::abs(s.gamma_1 - std::exp(s.beta_q) * s.gamma_2) / s.gamma_1);
    }
    const double eps = std::numeric_limits<double>::epsilon();
    report(8, "Fixed point and detailed balance", residual <= 4 * eps && balance <= 1e-12,
           fmt("relative Lyapunov residual = %.2e, detailed-balance deviation = %.2e", residual, balance));
}

void integral_vs_asymptotic() {
    const auto cold = reference.with_temperature(0.0);
    const double omega = 1e2;
    const auto t0 = std::chrono::steady_clock::now();
    const auto integral = gamma_integral(omega, cold);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const double closed = gamma_beliaev_asymptotic(omega, cold).rate;
    const double dev = std::abs(integral.gamma_B / closed - 1.0);
    report(9, "Collision integral vs closed form", dev <= 0.10 && secs < 10.0,
           fmt("integral = %.6g, closed form = %.6g 1/s, deviation = %.2e, %.1f ms", integral.gamma_B, closed, dev,
               secs * 1e3));
}

}  // namespace

int main() {
    const std::function<void()> criteria[] = {beliaev_rate,     decoherence_time, three_body,
                                              fig1_shape,       fig2_slope,       fock_equivalence,
                                              lyapunov_numeric, fixed_point,      integral_vs_asymptotic};
    int id = 1;
    for (const auto& run : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            report(id, "criterion", false, std::string("threw: ") + e.what());
        }
        ++id;
    }
    std::printf("%s\n", failures == 0 ? "All acceptance criteria passed." : "Some acceptance criteria FAILED.");
    return failures == 0 ? 0 : 1;
}
