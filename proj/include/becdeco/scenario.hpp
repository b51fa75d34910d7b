// Scenario configuration and the computations behind the CLI:
// metric trajectories, frequency sweeps and the self-verification suite.
//
// Config files are `key = value` lines; `#` starts a comment. Every physical key
// carries its SI unit in its name. Unknown keys are rejected.

#pragma once

#include "becdeco/bec_physics.hpp"
#include "becdeco/damping.hpp"
#include "becdeco/decoherence.hpp"
#include "becdeco/quadrature.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace becdeco {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class RateSource { automatic, asymptotic, integral, explicit_rate };

struct ScenarioConfig {
    std::string species = "rb87";
    std::optional<double> mass_kg;
    std::optional<double> scattering_length_m;
    std::optional<double> speed_of_sound_m_per_s;
    std::optional<double> density_per_m3;
    double temperature_K = 0.5e-9;
    double mode_frequency_rad_per_s = 1e4;

    std::string initial_state = "squeezed";  // squeezed | bath_thermal
    double initial_squeezing_r = 0.0;
    double initial_squeezing_phase_rad = 0.0;
    double initial_purity = 1.0;
    std::optional<double> initial_thermal_occupation;  // overrides initial_purity
    double displacement_x1 = 0.0;
    double displacement_x2 = 0.0;

    double t_start_s = 0.0;
    double t_end_s = 10.0;
    int t_points = 501;

    RateSource rate_source = RateSource::automatic;
    std::optional<double> gamma_per_s;

    double three_body_L3_m6_per_s = constants::rb87_three_body_L3;

    double quad_rel_tol = 1e-6;
    int quad_max_subdivisions = 400;

    double sweep_omega_min_rad_per_s = 1e3;
    double sweep_omega_max_rad_per_s = 1e4;
    int sweep_points = 50;
    std::vector<double> sweep_speeds_of_sound_m_per_s{3.4e-3};
};

// Built-in reproductions: "fig1" (trajectory of an r = 10 squeezed vacuum at
// 10^4 rad/s, 0.5 nK, c_s = 3.4 mm/s) and "fig2" (t_min vs ω for several c_s).
ScenarioConfig preset(const std::string& name);

// Overlays `key = value` lines onto `base`; throws ConfigError naming the key.
ScenarioConfig apply_config(ScenarioConfig base, std::istream& in);
ScenarioConfig load_config(ScenarioConfig base, const std::string& path);
// Cross-key checks (exactly one of sound speed / density, positivity, ...).
void validate(const ScenarioConfig& cfg);

CondensateParams condensate_for(const ScenarioConfig& cfg, std::optional<double> speed_of_sound = std::nullopt);
QuadratureConfig quadrature_for(const ScenarioConfig& cfg);

struct RateReport {
    DampingResult damping;
    std::string source;  // auto | asymptotic | integral | explicit
};

RateReport compute_rate(const ScenarioConfig& cfg, const CondensateParams& params, double omega_q);

struct TrajectoryReport {
    RateReport rate;
    CondensateParams params;
    MetricTrajectory metrics;
    double n0;
    double three_body_half_life;
    double three_body_rate0;
};

TrajectoryReport run_trajectory(const ScenarioConfig& cfg);
std::string trajectory_csv(const TrajectoryReport& report);

struct SweepRow {
    double speed_of_sound;
    double omega;
    double gamma;
    std::optional<double> t_min;
    double t_half;
    bool truncated;  // t_min exceeds the condensate half-life
};

struct TruncationPoint {
    double speed_of_sound;
    std::optional<double> omega;  // where t_min = t_half inside the swept range
};

struct SweepReport {
    std::vector<SweepRow> rows;
    std::vector<TruncationPoint> truncation;
};

// Rows are ordered by (c_s as listed, ω ascending) whatever the evaluation order.
SweepReport run_sweep(const ScenarioConfig& cfg);
std::string sweep_csv(const SweepReport& report);

struct CheckResult {
    std::string name;
    double deviation;
    double tolerance;
    bool pass;
};

struct VerifyOptions {
    std::optional<double> tolerance;  // replaces every per-check tolerance
    bool inject_gamma_sign_flip = false;
};

std::vector<CheckResult> run_verify(const VerifyOptions& opts = {});
std::string verify_report(const std::vector<CheckResult>& checks);

std::string gnuplot_trajectory_script(const std::string& csv_path);
std::string gnuplot_sweep_script(const std::string& csv_path);

// log-spaced grid of `points` values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> linear_grid(double lo, double hi, int points);

}  // namespace becdeco
