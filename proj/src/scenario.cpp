#include "becdeco/scenario.hpp"

#include "becdeco/fock_oracle.hpp"
#include "becdeco/gaussian.hpp"
#include "becdeco/lyapunov.hpp"
#include "becdeco/three_body.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <future>
#include <istream>
#include <limits>
#include <map>
#include <sstream>

namespace becdeco {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
    }
    if (used != value.size() || !std::isfinite(out)) {
        throw ConfigError("config key '" + key + "': expected a finite number, got '" + value + "'");
    }
    return out;
}

int parse_int(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    if (d != std::floor(d) || std::abs(d) > 1e9) {
        throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
    }
    return static_cast<int>(d);
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
    if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
    return out;
}

RateSource parse_rate_source(const std::string& key, const std::string& value) {
    if (value == "auto") return RateSource::automatic;
    if (value == "asymptotic") return RateSource::asymptotic;
    if (value == "integral") return RateSource::integral;
    if (value == "explicit") return RateSource::explicit_rate;
    throw ConfigError("config key '" + key + "': expected auto|asymptotic|integral|explicit, got '" + value + "'");
}

using Setter = std::function<void(ScenarioConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
    static const std::map<std::string, Setter> table = {
        {"species", [](ScenarioConfig& c, const std::string&, const std::string& v) { c.species = v; }},
        {"mass_kg", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.mass_kg = parse_double(k, v); }},
        {"scattering_length_m",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.scattering_length_m = parse_double(k, v); }},
        {"speed_of_sound_m_per_s",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.speed_of_sound_m_per_s = parse_double(k, v);
             c.density_per_m3.reset();
         }},
        {"density_per_m3",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.density_per_m3 = parse_double(k, v);
             c.speed_of_sound_m_per_s.reset();
         }},
        {"temperature_K",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.temperature_K = parse_double(k, v); }},
        {"mode_frequency_rad_per_s",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.mode_frequency_rad_per_s = parse_double(k, v);
         }},
        {"initial_state", [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             if (v != "squeezed" && v != "bath_thermal") {
                 throw ConfigError("config key '" + k + "': expected squeezed|bath_thermal, got '" + v + "'");
             }
             c.initial_state = v;
         }},
        {"initial_squeezing_r",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.initial_squeezing_r = parse_double(k, v); }},
        {"initial_squeezing_phase_rad",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.initial_squeezing_phase_rad = parse_double(k, v);
         }},
        {"initial_purity",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.initial_purity = parse_double(k, v);
             c.initial_thermal_occupation.reset();
         }},
        {"initial_thermal_occupation",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.initial_thermal_occupation = parse_double(k, v);
         }},
        {"displacement_x1",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.displacement_x1 = parse_double(k, v); }},
        {"displacement_x2",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.displacement_x2 = parse_double(k, v); }},
        {"t_start_s", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.t_start_s = parse_double(k, v); }},
        {"t_end_s", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.t_end_s = parse_double(k, v); }},
        {"t_points", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.t_points = parse_int(k, v); }},
        {"rate_source",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.rate_source = parse_rate_source(k, v); }},
        {"gamma_per_s", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.gamma_per_s = parse_double(k, v); }},
        {"three_body_L3_m6_per_s",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.three_body_L3_m6_per_s = parse_double(k, v);
         }},
        {"quad_rel_tol", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.quad_rel_tol = parse_double(k, v); }},
        {"quad_max_subdivisions",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.quad_max_subdivisions = parse_int(k, v); }},
        {"sweep_omega_min_rad_per_s",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.sweep_omega_min_rad_per_s = parse_double(k, v);
         }},
        {"sweep_omega_max_rad_per_s",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.sweep_omega_max_rad_per_s = parse_double(k, v);
         }},
        {"sweep_points", [](ScenarioConfig& c, const std::string& k, const std::string& v) { c.sweep_points = parse_int(k, v); }},
        {"sweep_speeds_of_sound_m_per_s",
         [](ScenarioConfig& c, const std::string& k, const std::string& v) {
             c.sweep_speeds_of_sound_m_per_s = parse_list(k, v);
         }},
    };
    return table;
}

const constants::Species* find_species(const std::string& name) {
    if (name == constants::rubidium87.name) return &constants::rubidium87;
    if (name == constants::ytterbium174.name) return &constants::ytterbium174;
    return nullptr;
}

std::string num(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string opt_num(const std::optional<double>& x) { return x ? num(*x) : std::string("none"); }

double initial_purity_of(const ScenarioConfig& cfg) {
    if (cfg.initial_thermal_occupation) return 1.0 / (1.0 + 2.0 * *cfg.initial_thermal_occupation);
    return cfg.initial_purity;
}

}  // namespace

ScenarioConfig preset(const std::string& name) {
    ScenarioConfig cfg;
    cfg.speed_of_sound_m_per_s = 3.4e-3;
    cfg.temperature_K = 0.5e-9;
    cfg.mode_frequency_rad_per_s = 1e4;
    cfg.initial_squeezing_r = 10.0;
    cfg.initial_purity = 1.0;
    if (name == "fig1") {
        cfg.t_start_s = 0.0;
        cfg.t_end_s = 10.0;
        cfg.t_points = 501;
        return cfg;
    }
    if (name == "fig2") {
        cfg.sweep_omega_min_rad_per_s = 1e3;
        cfg.sweep_omega_max_rad_per_s = 1e4;
        cfg.sweep_points = 50;
        cfg.sweep_speeds_of_sound_m_per_s = {1.5e-3, 2.0e-3, 2.5e-3, 3.4e-3};
        return cfg;
    }
    throw ConfigError("unknown preset '" + name + "' (expected fig1 or fig2)");
}

ScenarioConfig apply_config(ScenarioConfig cfg, std::istream& in) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) throw ConfigError("config key '" + key + "': unknown key");
        if (value.empty()) throw ConfigError("config key '" + key + "': missing value");
        it->second(cfg, key, value);
    }
    return cfg;
}

ScenarioConfig load_config(ScenarioConfig base, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return apply_config(std::move(base), in);
}

void validate(const ScenarioConfig& cfg) {
    const auto positive = [](const char* key, double v) {
        if (!(v > 0.0)) throw ConfigError(std::string("config key '") + key + "': must be positive");
    };
    if (!find_species(cfg.species) && !(cfg.mass_kg && cfg.scattering_length_m)) {
        throw ConfigError("config key 'species': unknown species '" + cfg.species +
                          "' (give mass_kg and scattering_length_m instead)");
    }
    if (cfg.mass_kg) positive("mass_kg", *cfg.mass_kg);
    if (cfg.scattering_length_m) positive("scattering_length_m", *cfg.scattering_length_m);
    if (cfg.speed_of_sound_m_per_s.has_value() == cfg.density_per_m3.has_value()) {
        throw ConfigError("config key 'speed_of_sound_m_per_s': give exactly one of speed_of_sound_m_per_s, density_per_m3");
    }
    if (cfg.speed_of_sound_m_per_s) positive("speed_of_sound_m_per_s", *cfg.speed_of_sound_m_per_s);
    if (cfg.density_per_m3) positive("density_per_m3", *cfg.density_per_m3);
    if (!(cfg.temperature_K >= 0.0)) throw ConfigError("config key 'temperature_K': must be >= 0");
    positive("mode_frequency_rad_per_s", cfg.mode_frequency_rad_per_s);
    if (!(cfg.initial_squeezing_r >= 0.0)) throw ConfigError("config key 'initial_squeezing_r': must be >= 0");
    if (cfg.initial_thermal_occupation && !(*cfg.initial_thermal_occupation >= 0.0)) {
        throw ConfigError("config key 'initial_thermal_occupation': must be >= 0");
    }
    const double mu0 = initial_purity_of(cfg);
    if (!(mu0 > 0.0 && mu0 <= 1.0)) throw ConfigError("config key 'initial_purity': must lie in (0, 1]");
    if (!(cfg.t_start_s >= 0.0)) throw ConfigError("config key 't_start_s': must be >= 0");
    if (!(cfg.t_end_s > cfg.t_start_s)) throw ConfigError("config key 't_end_s': must exceed t_start_s");
    if (cfg.t_points < 2) throw ConfigError("config key 't_points': need at least 2 points");
    if (cfg.rate_source == RateSource::explicit_rate) {
        if (!cfg.gamma_per_s) throw ConfigError("config key 'gamma_per_s': required when rate_source = explicit");
        if (!(*cfg.gamma_per_s >= 0.0)) throw ConfigError("config key 'gamma_per_s': must be >= 0");
    }
    positive("three_body_L3_m6_per_s", cfg.three_body_L3_m6_per_s);
    positive("quad_rel_tol", cfg.quad_rel_tol);
    if (cfg.quad_max_subdivisions < 1) throw ConfigError("config key 'quad_max_subdivisions': must be >= 1");
    positive("sweep_omega_min_rad_per_s", cfg.sweep_omega_min_rad_per_s);
    if (!(cfg.sweep_omega_max_rad_per_s >= cfg.sweep_omega_min_rad_per_s)) {
        throw ConfigError("config key 'sweep_omega_max_rad_per_s': empty frequency range");
    }
    if (cfg.sweep_points < 1) throw ConfigError("config key 'sweep_points': empty frequency range");
    if (cfg.sweep_points > 1 && cfg.sweep_omega_max_rad_per_s == cfg.sweep_omega_min_rad_per_s) {
        throw ConfigError("config key 'sweep_omega_max_rad_per_s': empty frequency range");
    }
    if (cfg.sweep_speeds_of_sound_m_per_s.empty()) {
        throw ConfigError("config key 'sweep_speeds_of_sound_m_per_s': empty list");
    }
    for (double c : cfg.sweep_speeds_of_sound_m_per_s) positive("sweep_speeds_of_sound_m_per_s", c);
}

CondensateParams condensate_for(const ScenarioConfig& cfg, std::optional<double> speed_of_sound) {
    const auto* species = find_species(cfg.species);
    const double mass = cfg.mass_kg ? *cfg.mass_kg : species->mass;
    const double a = cfg.scattering_length_m ? *cfg.scattering_length_m : species->scattering_length;
    if (speed_of_sound) return CondensateParams::from_speed_of_sound(mass, a, *speed_of_sound, cfg.temperature_K);
    if (cfg.speed_of_sound_m_per_s) {
        return CondensateParams::from_speed_of_sound(mass, a, *cfg.speed_of_sound_m_per_s, cfg.temperature_K);
    }
    return CondensateParams::from_density(mass, a, *cfg.density_per_m3, cfg.temperature_K);
}

QuadratureConfig quadrature_for(const ScenarioConfig& cfg) {
    QuadratureConfig q;
    q.rel_tol = cfg.quad_rel_tol;
    q.max_subdivisions = static_cast<std::size_t>(cfg.quad_max_subdivisions);
    return q;
}

RateReport compute_rate(const ScenarioConfig& cfg, const CondensateParams& params, double omega_q) {
    const double t = params.temperature();
    switch (cfg.rate_source) {
        case RateSource::automatic:
            return {select_regime(omega_q, params, quadrature_for(cfg)), "auto"};
        case RateSource::asymptotic:
            return {asymptotic_damping(omega_q, params), "asymptotic"};
        case RateSource::integral: {
            const auto r = gamma_integral(omega_q, params, quadrature_for(cfg));
            return {split_rates(r.gamma_B + r.gamma_L, r.gamma_B, r.gamma_L, omega_q, t, Regime::integral), "integral"};
        }
        case RateSource::explicit_rate:
            return {split_rates(*cfg.gamma_per_s, 0.0, 0.0, omega_q, t, Regime::integral), "explicit"};
    }
    throw ConfigError("unknown rate source");
}

std::vector<double> linear_grid(double lo, double hi, int points) {
    if (points < 1) throw std::invalid_argument("linear_grid: need at least one point");
    std::vector<double> g(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        g[static_cast<std::size_t>(i)] = points == 1 ? lo : lo + (hi - lo) * i / (points - 1);
    }
    if (points > 1) g.back() = hi;
    return g;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0 && hi > 0.0)) throw std::invalid_argument("log_grid: bounds must be positive");
    auto g = linear_grid(std::log(lo), std::log(hi), points);
    for (auto& x : g) x = std::exp(x);
    g.front() = lo;
    if (points > 1) g.back() = hi;
    return g;
}

TrajectoryReport run_trajectory(const ScenarioConfig& cfg) {
    validate(cfg);
    const auto params = condensate_for(cfg);
    const double omega = cfg.mode_frequency_rad_per_s;
    const auto rate = compute_rate(cfg, params, omega);
    const double n_th = rate.damping.n_th;
    const double mu_inf = asymptotic_purity(n_th);

    double mu0 = initial_purity_of(cfg);
    double r0 = cfg.initial_squeezing_r;
    if (cfg.initial_state == "bath_thermal") {
        mu0 = mu_inf;
        r0 = 0.0;
    }
    Vector<double> d(2);
    d << cfg.displacement_x1, cfg.displacement_x2;
    const auto state = state_from_params<double>(mu0, r0, cfg.initial_squeezing_phase_rad, d);
    const double n0 = state.occupation();

    const DecoherenceInputs inputs{mu0, r0, mu_inf, rate.damping.gamma};
    const auto grid = linear_grid(cfg.t_start_s, cfg.t_end_s, cfg.t_points);
    const ThreeBodyParams tb{cfg.three_body_L3_m6_per_s, params.density()};
    return {rate, params, metric_trajectory(inputs, n0, n_th, grid), n0, half_life(tb), three_body_rate(tb, 0.0)};
}

std::string trajectory_csv(const TrajectoryReport& rep) {
    const auto& d = rep.rate.damping;
    const auto& p = rep.params;
    std::ostringstream out;
    out << "# becdeco trajectory\n";
    out << "# mass_kg = " << num(p.mass()) << "\n";
    out << "# scattering_length_m = " << num(p.scattering_length()) << "\n";
    out << "# speed_of_sound_m_per_s = " << num(p.speed_of_sound()) << "\n";
    out << "# density_per_m3 = " << num(p.density()) << "\n";
    out << "# temperature_K = " << num(p.temperature()) << "\n";
    out << "# rate_source = " << rep.rate.source << "\n";
    out << "# regime = " << (rep.rate.source == "explicit" ? std::string("explicit") : std::string(to_string(d.regime)))
        << "\n";
    out << "# regime_valid = " << (d.regime_valid ? "true" : "false") << "\n";
    out << "# gamma_per_s = " << num(d.gamma) << "\n";
    out << "# gamma_B_per_s = " << num(d.gamma_B) << "\n";
    out << "# gamma_L_per_s = " << num(d.gamma_L) << "\n";
    out << "# gamma_1_per_s = " << num(d.gamma_1) << "\n";
    out << "# gamma_2_per_s = " << num(d.gamma_2) << "\n";
    out << "# gamma_T_per_s = " << num(d.gamma_T) << "\n";
    out << "# beta_q_dimensionless = " << num(d.beta_q) << "\n";
    out << "# n_th_dimensionless = " << num(d.n_th) << "\n";
    out << "# mu_inf_dimensionless = " << num(rep.metrics.mu_inf) << "\n";
    out << "# t_min_s = " << opt_num(rep.metrics.t_min) << "\n";
    out << "# t_tau0_s = " << num(rep.metrics.t_tau0) << "\n";
    out << "# three_body_rate0_per_s = " << num(rep.three_body_rate0) << "\n";
    out << "# three_body_half_life_s = " << num(rep.three_body_half_life) << "\n";
    out << "t_s,mu,tau,r,N\n";
    const auto& m = rep.metrics;
    for (std::size_t i = 0; i < m.t.size(); ++i) {
        out << num(m.t[i]) << ',' << num(m.mu[i]) << ',' << num(m.tau[i]) << ',' << num(m.r[i]) << ',' << num(m.n[i])
            << '\n';
    }
    return out.str();
}

SweepReport run_sweep(const ScenarioConfig& cfg) {
    validate(cfg);
    const auto omegas = log_grid(cfg.sweep_omega_min_rad_per_s, cfg.sweep_omega_max_rad_per_s, cfg.sweep_points);
    const double mu0 = initial_purity_of(cfg);
    const double r0 = cfg.initial_squeezing_r;

    const auto t_min_at = [&](const CondensateParams& params, double omega) {
        const auto rate = compute_rate(cfg, params, omega);
        const DecoherenceInputs in{mu0, r0, asymptotic_purity(rate.damping.n_th), rate.damping.gamma};
        return std::pair{rate.damping.gamma, purity_minimum_time(in)};
    };

    SweepReport report;
    for (double c_s : cfg.sweep_speeds_of_sound_m_per_s) {
        const auto params = condensate_for(cfg, c_s);
        const double t_half = half_life({cfg.three_body_L3_m6_per_s, params.density()});

        std::vector<std::future<SweepRow>> jobs;
        jobs.reserve(omegas.size());
        for (double omega : omegas) {
            jobs.push_back(std::async(std::launch::async, [&, omega, c_s, t_half] {
                const auto [gamma, t_min] = t_min_at(params, omega);
                return SweepRow{c_s, omega, gamma, t_min, t_half, t_min && *t_min > t_half};
            }));
        }
        std::vector<SweepRow> rows;
        rows.reserve(jobs.size());
        for (auto& j : jobs) rows.push_back(j.get());

        // First sign change of t_min − t_half on the grid, refined by bisection in log ω.
        TruncationPoint tp{c_s, std::nullopt};
        for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
            if (!rows[i].t_min || !rows[i + 1].t_min) continue;
            const double f0 = *rows[i].t_min - t_half;
            const double f1 = *rows[i + 1].t_min - t_half;
            if (f0 == 0.0) {
                tp.omega = rows[i].omega;
                break;
            }
            if ((f0 > 0.0) != (f1 > 0.0)) {
                double lo = std::log(rows[i].omega), hi = std::log(rows[i + 1].omega);
                const bool lo_positive = f0 > 0.0;
                for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const auto t_mid = t_min_at(params, std::exp(mid)).second;
                    const bool positive = t_mid && *t_mid > t_half;
                    (positive == lo_positive ? lo : hi) = mid;
                }
                tp.omega = std::exp(0.5 * (lo + hi));
                break;
            }
        }
        report.truncation.push_back(tp);
        report.rows.insert(report.rows.end(), rows.begin(), rows.end());
    }
    return report;
}

std::string sweep_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "# becdeco sweep\n";
    for (const auto& tp : report.truncation) {
        out << "# truncation speed_of_sound_m_per_s = " << num(tp.speed_of_sound)
            << " omega_rad_per_s = " << opt_num(tp.omega) << "\n";
    }
    out << "c_s_m_per_s,omega_rad_per_s,gamma_per_s,t_min_s,t_half_s,truncated\n";
    for (const auto& r : report.rows) {
        out << num(r.speed_of_sound) << ',' << num(r.omega) << ',' << num(r.gamma) << ',' << opt_num(r.t_min) << ','
            << num(r.t_half) << ',' << (r.truncated ? 1 : 0) << '\n';
    }
    return out.str();
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts) {
    std::vector<CheckResult> checks;
    const auto add = [&](std::string name, double deviation, double tolerance) {
        const double tol = opts.tolerance.value_or(tolerance);
        checks.push_back({std::move(name), deviation, tol, std::isfinite(deviation) && deviation <= tol});
    };

    const auto fig1 = preset("fig1");
    const auto params = condensate_for(fig1);
    const double omega = fig1.mode_frequency_rad_per_s;
    const auto damping = select_regime(omega, params);

    // Stationarity of σ∞ under the fig1 channel.
    {
        auto ch = thermal_channel<double>(damping.gamma, damping.n_th, omega);
        if (opts.inject_gamma_sign_flip) {
            ch.A = 0.5 * damping.gamma * Matrix<double>::Identity(2, 2) + omega * SymplecticConvention<double>::omega(1);
        }
        const auto res = lyapunov_residual(ch, ch.thermal->sigma_inf);
        add("fixed_point_residual", res.cwiseAbs().maxCoeff() / ch.D.cwiseAbs().maxCoeff(), 1e-14);
    }

    // Detailed balance of the split rates at β = ln 2 and at the fig1 point.
    {
        const double beta = std::log(2.0);
        const double t = constants::hbar * omega / (constants::boltzmann * beta);
        const auto warm = split_rates(damping.gamma, damping.gamma, 0.0, omega, t, Regime::quantum);
        double dev = std::abs(warm.gamma_1 - std::exp(warm.beta_q) * warm.gamma_2) / warm.gamma_1;
        dev = std::max(dev, std::abs(damping.gamma_1 - damping.gamma_2 - damping.gamma) / damping.gamma);
        add("detailed_balance", dev, 1e-12);
    }

    // Collision integral against the Beliaev closed form, deep phonon regime, T = 0.
    {
        const auto cold = params.with_temperature(0.0);
        const double w = 1e2;
        const auto integral = gamma_integral(w, cold);
        const auto closed = gamma_beliaev_asymptotic(w, cold);
        add("beliaev_integral_vs_closed_form", std::abs(integral.gamma_B / closed.rate - 1.0), 0.10);
    }

    // Numerical Lyapunov integration against the closed form, fig1 state and rate.
    {
        const auto state = state_from_params<double>(1.0, 10.0, 0.0);
        const auto ch = thermal_channel<double>(damping.gamma, damping.n_th, 0.0);
        const auto grid = linear_grid(0.0, 5.0 / damping.gamma, 201);
        const auto numeric = evolve_numeric<double>(state, [&](double) { return ch; }, grid);
        double dev = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto exact = evolve_closed_form(state, ch, grid[i]);
            for (Eigen::Index j = 0; j < 4; ++j) {
                const double ref = exact.covariance()(j);
                if (ref != 0.0) dev = std::max(dev, std::abs(numeric[i].covariance()(j) / ref - 1.0));
            }
        }
        add("lyapunov_numeric_vs_closed_form", dev, 1e-8);
    }

    // Truncated-Fock master equation against the Gaussian closed forms.
    {
        const double gamma = 1.0, n_th = 0.2, r0 = 0.5, w = 1.0;
        const auto rho0 = TruncatedDensityMatrix::from_pure(squeezed_vacuum_fock(r0, 40));
        const FockChannel fch{w, gamma * (1.0 + n_th), gamma * n_th};
        const auto grid = linear_grid(0.0, 5.0, 51);
        const auto samples = lindblad_step_integrate(rho0, fch, grid);
        // The number-basis S(r)|0> is squeezed along x₁, i.e. phase ψ = π.
        const auto initial = state_from_params<double>(1.0, r0, constants::pi);
        const auto ch = thermal_channel<double>(gamma, n_th, w);
        const DecoherenceInputs in{1.0, r0, asymptotic_purity(n_th), gamma};
        double dev_mu = 0.0, dev_sigma = 0.0, dev_n = 0.0;
        for (const auto& s : samples) {
            dev_mu = std::max(dev_mu, std::abs(s.purity - purity_evolution(in, s.t)));
            const auto exact = evolve_closed_form(initial, ch, s.t);
            dev_sigma = std::max(dev_sigma, (s.sigma - Eigen::Matrix2d(exact.covariance())).cwiseAbs().maxCoeff());
            dev_n = std::max(dev_n, std::abs(s.occupation - occupation_evolution(initial.occupation(), n_th, gamma, s.t)));
        }
        add("fock_purity", dev_mu, 1e-3);
        add("fock_covariance", dev_sigma, 1e-3);
        add("fock_occupation", dev_n, 1e-3);
    }

    // Closed-form metrics against parameters extracted from the evolved covariance.
    {
        const auto state = state_from_params<double>(1.0, 10.0, 0.0);
        const double mu_inf = asymptotic_purity(damping.n_th);
        // The metrics are rotation invariant; ω′ = 0 keeps the r = 10 covariance diagonal.
        const auto ch = thermal_channel<double>(damping.gamma, damping.n_th, 0.0);
        const DecoherenceInputs in{1.0, 10.0, mu_inf, damping.gamma};
        double dev = 0.0;
        for (double t : linear_grid(0.0, 10.0, 200)) {
            const auto p = params_from_state(evolve_closed_form(state, ch, t));
            dev = std::max(dev, std::abs(p.mu / purity_evolution(in, t) - 1.0));
            dev = std::max(dev, std::abs(p.N / occupation_evolution(state.occupation(), damping.n_th, damping.gamma, t) - 1.0));
        }
        add("metric_consistency", dev, 1e-10);
    }
    return checks;
}

std::string verify_report(const std::vector<CheckResult>& checks) {
    std::ostringstream out;
    bool all = true;
    for (const auto& c : checks) {
        char line[256];
        std::snprintf(line, sizeof line, "%-4s %-34s deviation = %.3e  tolerance = %.3e\n", c.pass ? "PASS" : "FAIL",
                      c.name.c_str(), c.deviation, c.tolerance);
        out << line;
        all = all && c.pass;
    }
    out << (all ? "verify: all checks passed\n" : "verify: FAILED\n");
    return out.str();
}

std::string gnuplot_trajectory_script(const std::string& csv_path) {
    std::ostringstream out;
    out << "set datafile separator ','\n"
        << "set key autotitle columnhead\n"
        << "set xlabel 't [s]'\n"
        << "set multiplot layout 2,2\n"
        << "plot '" << csv_path << "' using 1:2 with lines\n"
        << "plot '" << csv_path << "' using 1:3 with lines\n"
        << "plot '" << csv_path << "' using 1:4 with lines\n"
        << "set logscale y\n"
        << "plot '" << csv_path << "' using 1:5 with lines\n"
        << "unset multiplot\n";
    return out.str();
}

std::string gnuplot_sweep_script(const std::string& csv_path) {
    std::ostringstream out;
    out << "set datafile separator ','\n"
        << "set logscale xy\n"
        << "set xlabel 'omega [rad/s]'\n"
        << "set ylabel 't_min [s]'\n"
        << "plot '" << csv_path << "' using 2:($6 == 0 ? $4 : 1/0):1 every ::1 with lines lc variable notitle\n";
    return out.str();
}

}  // namespace becdeco
