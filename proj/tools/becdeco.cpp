// becdeco: phonon decoherence in a uniform condensate from the command line.
//
//   becdeco trajectory --preset fig1 --out fig1.csv [--gnuplot fig1.gp]
//   becdeco sweep      --preset fig2 --out fig2.csv
//   becdeco rates      --config my.cfg
//   becdeco verify     [--tolerance 1e-6]
//
// Relative --out paths are placed under $BECDECO_OUT_DIR when it is set.

#include "becdeco/scenario.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

std::string resolve_out(const std::string& path) {
    if (path.empty() || path == "-" || path.front() == '/') return path;
    const char* dir = std::getenv("BECDECO_OUT_DIR");
    if (!dir || !*dir) return path;
    std::string prefix(dir);
    if (prefix.back() != '/') prefix += '/';
    return prefix + path;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

becdeco::ScenarioConfig build_config(const std::string& preset_name, const std::string& config_path,
                                     const std::string& fallback) {
    auto cfg = becdeco::preset(preset_name.empty() ? fallback : preset_name);
    if (!config_path.empty()) cfg = becdeco::load_config(std::move(cfg), config_path);
    becdeco::validate(cfg);
    return cfg;
}

void print_rates(const becdeco::RateReport& rep, double omega) {
    const auto& d = rep.damping;
    std::printf("omega_rad_per_s   %.10g\n", omega);
    std::printf("rate_source       %s\n", rep.source.c_str());
    std::printf("regime            %s%s\n", std::string(becdeco::to_string(d.regime)).c_str(),
                d.regime_valid ? "" : " (outside its validity thresholds)");
    std::printf("gamma_per_s       %.10g\n", d.gamma);
    std::printf("gamma_B_per_s     %.10g\n", d.gamma_B);
    std::printf("gamma_L_per_s     %.10g\n", d.gamma_L);
    std::printf("gamma_1_per_s     %.10g\n", d.gamma_1);
    std::printf("gamma_2_per_s     %.10g\n", d.gamma_2);
    std::printf("gamma_T_per_s     %.10g\n", d.gamma_T);
    std::printf("beta_q            %.10g\n", d.beta_q);
    std::printf("n_th              %.10g\n", d.n_th);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decoherence of squeezed phonons in a Bose-Einstein condensate"};
    app.require_subcommand(1);

    std::string config_path, out_path, gnuplot_path, preset_name;
    std::optional<double> tolerance;
    bool inject_flip = false;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key = value scenario file")->check(CLI::ExistingFile);
        sub->add_option("--preset", preset_name, "built-in scenario")->check(CLI::IsMember({"fig1", "fig2"}));
    };

    auto* traj = app.add_subcommand("trajectory", "purity, depth, squeezing and occupation versus time");
    add_common(traj);
    traj->add_option("--out", out_path, "CSV destination (stdout if omitted)");
    traj->add_option("--gnuplot", gnuplot_path, "also write a gnuplot script here");

    auto* sweep = app.add_subcommand("sweep", "purity-minimum time versus frequency and sound speed");
    add_common(sweep);
    sweep->add_option("--out", out_path, "CSV destination (stdout if omitted)");
    sweep->add_option("--gnuplot", gnuplot_path, "also write a gnuplot script here");

    auto* rates = app.add_subcommand("rates", "damping-rate breakdown for the configured mode");
    add_common(rates);

    auto* verify = app.add_subcommand("verify", "self-consistency checks; exit code 1 on any failure");
    verify->add_option("--tolerance", tolerance, "replace every check tolerance")->check(CLI::PositiveNumber);
    verify->add_flag("--inject-gamma-sign-flip", inject_flip)->group("");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*traj) {
            const auto cfg = build_config(preset_name, config_path, "fig1");
            const std::string out = resolve_out(out_path);
            emit(becdeco::trajectory_csv(becdeco::run_trajectory(cfg)), out);
            if (!gnuplot_path.empty()) {
                emit(becdeco::gnuplot_trajectory_script(out.empty() ? "trajectory.csv" : out), resolve_out(gnuplot_path));
            }
        } else if (*sweep) {
            const auto cfg = build_config(preset_name, config_path, "fig2");
            const std::string out = resolve_out(out_path);
            emit(becdeco::sweep_csv(becdeco::run_sweep(cfg)), out);
            if (!gnuplot_path.empty()) {
                emit(becdeco::gnuplot_sweep_script(out.empty() ? "sweep.csv" : out), resolve_out(gnuplot_path));
            }
        } else if (*rates) {
            const auto cfg = build_config(preset_name, config_path, "fig1");
            const auto params = becdeco::condensate_for(cfg);
            print_rates(becdeco::compute_rate(cfg, params, cfg.mode_frequency_rad_per_s), cfg.mode_frequency_rad_per_s);
        } else if (*verify) {
            becdeco::VerifyOptions opts;
            opts.tolerance = tolerance;
            opts.inject_gamma_sign_flip = inject_flip;
            const auto checks = becdeco::run_verify(opts);
            std::cout << becdeco::verify_report(checks);
            for (const auto& c : checks) {
                if (!c.pass) return 1;
            }
        }
    } catch (const becdeco::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
