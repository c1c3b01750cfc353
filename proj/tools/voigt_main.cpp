// Pseudospectral Euler-Voigt / BBM solver with a blow-up detection harness.
//
// Subcommands:
//   run      single integration, diagnostics to CSV
//   sweep    alpha/nu grid + slope tables, verdicts, S_min(nu)
//   analyze  recompute tables/verdicts from existing series files
//   oracle   Burgers reference tables via the method of characteristics

#include "voigt/oracle.hpp"
#include "voigt/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct ConfigCli {
    std::string config_path;
    std::map<std::string, std::string, std::less<>> overrides;

    void attach(CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path, "config file (key = value lines)");
        auto add = [&](const char* flag, const char* key, const char* help) {
            cmd->add_option_function<std::string>(
                flag, [this, key](const std::string& v) { overrides[key] = v; }, help);
        };
        add("--model", "model", "ev3d or bbm");
        add("--n", "n", "points per axis");
        add("--alpha", "alpha", "comma list; rationals like 12/1024 are exact");
        add("--nu", "nu", "viscosity list (bbm only)");
        add("--cfl", "cfl", "Courant number in (0,1]");
        add("--t-end", "t_end", "integration end time");
        add("--sample-interval", "sample_interval", "diagnostics sampling interval");
        add("--horizons", "horizons", "comma list or start:step:stop");
        add("--output", "output", "output directory");
        add("--checkpoint-cadence", "checkpoint_cadence", "checkpoint every k-th sample (0 off)");
        add("--spectrum-cadence", "spectrum_cadence", "spectrum table every k-th sample (0 off)");
        add("--smin-mode", "smin_mode", "loglog (default) or literal");
    }

    voigt::RunConfig build() const {
        std::map<std::string, std::string, std::less<>> pairs;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot read config '" + config_path + "'");
            std::stringstream text;
            text << in.rdbuf();
            pairs = voigt::config_pairs(text.str());
        }
        for (const auto& [k, v] : overrides) pairs[k] = v;
        return voigt::build_config(pairs);
    }
};

void print_result(const voigt::RunConfig& cfg, const voigt::SweepResult& result) {
    for (const auto& note : result.notes) std::cout << "note: " << note << '\n';
    for (std::size_t ni = 0; ni < cfg.nus.size(); ++ni) {
        if (!result.verdicts[ni]) continue;
        const auto& v = *result.verdicts[ni];
        std::cout << "nu=" << voigt::format_double(cfg.nus[ni])
                  << ": blow_up_indicated=" << (v.blow_up_indicated ? "true" : "false");
        if (v.earliest_t) std::cout << " earliest_T=" << voigt::format_double(*v.earliest_t);
        std::cout << " min_slope=" << voigt::format_double(v.min_slope) << '\n';
    }
    if (result.smin) {
        std::cout << "S_min(nu) written to smin.csv ("
                  << (result.smin->mode == voigt::SminMode::LogLog ? "loglog" : "literal")
                  << " mode)\n";
    }
    std::cout << "tables written to " << cfg.output_dir.string() << '\n';
}

void run_oracle(double amplitude, const std::string& times, int profile_n,
                const std::string& profile_t, const std::string& output) {
    voigt::CharacteristicSolution sol;
    sol.amplitude = amplitude;
    const std::filesystem::path dir(output);
    std::filesystem::create_directories(dir);

    const std::vector<double> grid = voigt::parse_number_grid(times);
    {
        std::ofstream out(dir / "oracle_gradnorm.csv");
        out << "t,grad_norm\n";
        for (double t : grid)
            out << voigt::format_double(t) << ','
                << voigt::format_double(voigt::burgers_grad_norm(t, sol)) << '\n';
    }
    std::cout << "T* = " << voigt::format_double(sol.blowup_time())
              << "; gradient norms for " << grid.size() << " times written to "
              << (dir / "oracle_gradnorm.csv").string() << '\n';

    if (!profile_t.empty()) {
        const double t = voigt::parse_number(profile_t);
        std::ofstream out(dir / "oracle_profile.csv");
        out << "x,u\n";
        for (int i = 0; i < profile_n; ++i) {
            const double x = 2.0 * std::numbers::pi * i / profile_n;
            out << voigt::format_double(x) << ','
                << voigt::format_double(voigt::burgers_eval(x, t, sol)) << '\n';
        }
        std::cout << "profile at t=" << voigt::format_double(t) << " written to "
                  << (dir / "oracle_profile.csv").string() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral Euler-Voigt / BBM blow-up harness"};
    app.require_subcommand(1);

    ConfigCli run_cfg, sweep_cfg, analyze_cfg;
    auto* run_cmd = app.add_subcommand("run", "single integration");
    run_cfg.attach(run_cmd);
    auto* sweep_cmd = app.add_subcommand("sweep", "alpha/nu sweep + analysis");
    sweep_cfg.attach(sweep_cmd);
    auto* analyze_cmd = app.add_subcommand("analyze", "recompute tables from series files");
    analyze_cfg.attach(analyze_cmd);

    double amplitude = 1.0;
    std::string times = "0:0.05:0.95";
    std::string profile_t;
    int profile_n = 1024;
    std::string oracle_out = ".";
    auto* oracle_cmd = app.add_subcommand("oracle", "Burgers reference tables");
    oracle_cmd->add_option("--amplitude", amplitude, "u0 = -amplitude*sin(x)");
    oracle_cmd->add_option("--times", times, "comma list or start:step:stop");
    oracle_cmd->add_option("--profile-at", profile_t, "also emit u(x,t) at this time");
    oracle_cmd->add_option("--profile-n", profile_n, "profile sample count");
    oracle_cmd->add_option("--output", oracle_out, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const voigt::RunConfig cfg = run_cfg.build();
            const voigt::DiagnosticSeries series = voigt::run_single(cfg);
            std::cout << "run complete: " << series.size() << " samples, diagnostics in "
                      << (cfg.output_dir / voigt::series_filename(0, 0)).string() << '\n';
        } else if (sweep_cmd->parsed()) {
            const voigt::RunConfig cfg = sweep_cfg.build();
            const voigt::SweepResult result = voigt::run_sweep(cfg);
            print_result(cfg, result);
        } else if (analyze_cmd->parsed()) {
            const voigt::RunConfig cfg = analyze_cfg.build();
            const voigt::SweepResult result = voigt::analyze(cfg);
            print_result(cfg, result);
        } else if (oracle_cmd->parsed()) {
            run_oracle(amplitude, times, profile_n, profile_t, oracle_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
