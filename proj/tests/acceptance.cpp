// Acceptance suite: end-to-end checks against the pinned reference results.
// Each criterion prints one [PASS]/[FAIL] line; the exit code is the number
// of failures. `--criterion k` runs a single criterion (used by ctest).

#include "voigt/oracle.hpp"
#include "voigt/spectral_ops.hpp"
#include "voigt/sweep.hpp"
#include "voigt/timestep.hpp"
#include "voigt/transforms.hpp"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace voigt;

namespace {

std::filesystem::path out_dir(const std::string& name) {
    auto dir = std::filesystem::path("acceptance_out") / name;
    std::filesystem::create_directories(dir);
    return dir;
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    template <class T>
    void expect(bool cond, const char* what, const T& value) {
        if (!detail.str().empty()) detail << "; ";
        detail << what << "=" << value;
        if (!cond) {
            ok = false;
            detail << " (FAILED)";
        }
    }
};

RunConfig bbm_sweep_config(const std::string& out, const std::string& alphas,
                           const std::string& nus) {
    std::ostringstream cfg;
    cfg << "model = bbm\n"
        << "n = 8192\n"
        << "alpha = " << alphas << "\n"
        << "nu = " << nus << "\n"
        << "t_end = 1.25\n"
        << "sample_interval = 0.01\n"
        << "horizons = 0.65:0.01:1.25\n"
        << "output = " << out << "\n";
    return parse_config(cfg.str());
}

// ---- criterion 1: inviscid BBM blow-up detection ----------------------------
bool criterion_1(Check& c) {
    const auto dir = out_dir("c1_bbm_inviscid");
    RunConfig cfg = bbm_sweep_config(dir.string(),
                                     "128/8192, 138/8192, 192/8192, 256/8192", "0");
    const SweepResult result = run_sweep(cfg);
    const Verdict& v = result.verdicts.at(0).value();
    c.expect(v.blow_up_indicated, "blow_up_indicated", v.blow_up_indicated);
    const double earliest = v.earliest_t.value_or(-1.0);
    c.expect(std::abs(earliest - 1.138) <= 0.02, "earliest_T", earliest);
    return c.ok;
}

// ---- criterion 2: viscous BBM true-negative ---------------------------------
bool criterion_2(Check& c) {
    const auto dir = out_dir("c2_bbm_viscous");
    RunConfig cfg = bbm_sweep_config(dir.string(),
                                     "128/8192, 138/8192, 192/8192, 256/8192", "0.005");
    const SweepResult result = run_sweep(cfg);
    const Verdict& v = result.verdicts.at(0).value();
    c.expect(!v.blow_up_indicated, "blow_up_indicated", v.blow_up_indicated);
    c.expect(std::abs(v.min_slope - (-0.235)) <= 0.05, "min_slope", v.min_slope);
    return c.ok;
}

// ---- criterion 3: S_min(nu) crossing ----------------------------------------
bool criterion_3(Check& c) {
    const auto dir = out_dir("c3_smin");
    std::ostringstream nus;
    const int count = 13;  // log-spaced in [1e-5, 5e-3]
    for (int i = 0; i < count; ++i) {
        const double nu =
            1e-5 * std::pow(5e-3 / 1e-5, static_cast<double>(i) / (count - 1));
        if (i) nus << ", ";
        nus << format_double(nu);
    }
    RunConfig cfg = bbm_sweep_config(dir.string(), "128/8192, 138/8192", nus.str());
    const SweepResult result = run_sweep(cfg);
    const SminTable& t = result.smin.value();

    // S_min grows with nu; locate the -1 crossing by log-linear interpolation.
    double crossing = -1.0;
    for (std::size_t i = 1; i < t.nus.size(); ++i) {
        if (t.s_min[i - 1] <= -1.0 && t.s_min[i] > -1.0) {
            const double f = (-1.0 - t.s_min[i - 1]) / (t.s_min[i] - t.s_min[i - 1]);
            crossing = std::exp(std::log(t.nus[i - 1]) +
                                f * (std::log(t.nus[i]) - std::log(t.nus[i - 1])));
            break;
        }
    }
    c.expect(crossing > 0.0, "crossing_found", crossing > 0.0);
    c.expect(crossing >= 2.3e-4 / 2.0 && crossing <= 2.3e-4 * 2.0, "nu_star", crossing);
    return c.ok;
}

// ---- criterion 4: 1D conservation -------------------------------------------
bool criterion_4(Check& c) {
    GridSpec g = GridSpec::line(8192);
    {
        VoigtParams p{128.0 / 8192.0, 0.0, VoigtParams::Model::BBM1D};
        StepperConfig s;
        s.t_end = 1.25;
        s.sample_interval = 0.01;
        const IntegrationResult r = integrate(bbm_initial(g), p, s);
        const double eps = relative_energy_error(r.series);
        c.expect(eps < 1e-12, "inviscid_eps_rel", eps);
    }
    {
        VoigtParams p{128.0 / 8192.0, 0.005, VoigtParams::Model::BBM1D};
        StepperConfig s;
        s.t_end = 1.25;
        s.sample_interval = 0.01;
        s.scheme = StepperConfig::Scheme::IFRK4;
        const IntegrationResult r = integrate(bbm_initial(g), p, s);
        const double eps = relative_energy_error(r.series);
        c.expect(eps < 1e-11, "viscous_eps_rel", eps);
    }
    return c.ok;
}

// ---- criterion 5: 3D conservation at desk scale ------------------------------
bool criterion_5(Check& c) {
    GridSpec g = GridSpec::cube(64);
    VoigtParams p{4.0 / 64.0, 0.0, VoigtParams::Model::EulerVoigt3D};
    StepperConfig s;
    s.t_end = 5.0;
    s.sample_interval = 0.1;
    double worst_div = 0.0, worst_mean = 0.0;
    SampleCallback sink = [&](const DiagnosticRecord&, const SpectralField& field) {
        worst_div = std::max(worst_div, divergence_max(field));
        for (int comp = 0; comp < 3; ++comp)
            worst_mean = std::max(worst_mean, std::abs(field.at(comp, 0, 0, 0)));
    };
    const IntegrationResult r = integrate(taylor_green(g), p, s, sink);
    const double eps = relative_energy_error(r.series);
    c.expect(eps < 1e-9, "eps_rel", eps);
    c.expect(worst_div < 1e-10, "divergence_max", worst_div);
    c.expect(worst_mean < 1e-15, "mean_max", worst_mean);
    return c.ok;
}

// ---- criterion 6: 3D slope-table pipeline at desk scale ----------------------
bool criterion_6(Check& c) {
    const auto dir = out_dir("c6_ev3d_sweep");
    std::ostringstream cfg_text;
    cfg_text << "model = ev3d\n"
             << "n = 128\n"
             << "alpha = 8/128, 12/128, 16/128\n"
             << "t_end = 5\n"
             << "sample_interval = 0.1\n"
             << "horizons = 0:0.1:5\n"
             << "output = " << dir.string() << "\n";
    RunConfig cfg = parse_config(cfg_text.str());
    const SweepResult result = run_sweep(cfg);
    const SlopeTable& table = result.tables.at(0).value();

    bool monotone = true;
    for (const auto& row : table.q)
        for (std::size_t j = 0; j + 1 < row.size(); ++j)
            if (row[j] > row[j + 1] * (1.0 + 1e-12)) monotone = false;
    c.expect(monotone, "q_rows_monotone", monotone);

    bool finite = !table.slopes.empty();
    for (const auto& row : table.slopes)
        for (double v : row)
            if (!std::isfinite(v)) finite = false;
    c.expect(finite, "slopes_finite", finite);

    // Energy exchanges into scaled enstrophy while the alpha-energy holds.
    double worst_eps = 0.0;
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai)
        worst_eps = std::max(worst_eps, relative_energy_error(result.series[ai][0]));
    c.expect(worst_eps < 1e-6, "eps_rel_all_alphas", worst_eps);

    const DiagnosticSeries& smallest = result.series[0][0];
    double max_ens = 0.0;
    for (double v : smallest.scaled_enstrophy) max_ens = std::max(max_ens, v);
    const double growth = max_ens / smallest.scaled_enstrophy.front();
    c.expect(growth > 1.2, "enstrophy_growth", growth);
    double min_energy = smallest.l2_energy.front();
    for (double v : smallest.l2_energy) min_energy = std::min(min_energy, v);
    c.expect(min_energy < smallest.l2_energy.front(), "energy_dipped",
             min_energy / smallest.l2_energy.front());
    return c.ok;
}

// ---- criterion 7: oracle agreement -------------------------------------------
bool criterion_7(Check& c) {
    c.expect(burgers_blowup_time(1.0) == 1.0, "T_star", burgers_blowup_time(1.0));

    GridSpec g = GridSpec::line(8192);
    CharacteristicSolution oracle;
    std::vector<double> errors;
    for (double num : {64.0, 32.0, 16.0, 8.0}) {
        VoigtParams p{num / 8192.0, 0.0, VoigtParams::Model::BBM1D};
        StepperConfig s;
        s.t_end = 0.5;
        s.sample_interval = 0.1;
        const IntegrationResult r = integrate(bbm_initial(g), p, s);
        const PhysicalField u = to_physical(r.final_state);
        double err_sq = 0.0;
        const double dx = g.cell_volume();
        for (int i = 0; i < g.n[0]; ++i) {
            const double diff =
                u.component(0)[i] - burgers_eval(g.coordinate(0, i), 0.5, oracle);
            err_sq += diff * diff * dx;
        }
        errors.push_back(std::sqrt(err_sq));
    }
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i)
        if (!(errors[i] > errors[i + 1])) decreasing = false;
    std::ostringstream list;
    for (double e : errors) list << format_double(e) << " ";
    c.expect(decreasing, "l2_errors_decreasing", list.str());
    return c.ok;
}

// ---- criterion 8: numerics properties -----------------------------------------
bool criterion_8(Check& c) {
    // Temporal self-convergence for both schemes.
    for (bool viscous : {false, true}) {
        GridSpec g = GridSpec::line(128);
        VoigtParams p{0.1, viscous ? 0.01 : 0.0, VoigtParams::Model::BBM1D};
        const auto symbol = viscous ? bbm_linear_symbol(g, p) : std::vector<double>{};
        OdeRhs rhs = [&](const OdeState& st, double) {
            return OdeState{viscous ? bbm_advective_rhs(st.field, p) : bbm_rhs(st.field, p),
                            0.0};
        };
        auto solve = [&](double dt) {
            OdeState y{bbm_initial(g), 0.0};
            const auto steps = static_cast<std::int64_t>(std::llround(0.2 / dt));
            double t = 0.0;
            for (std::int64_t i = 0; i < steps; ++i, t += dt)
                y = viscous ? ifrk4_step(y, t, dt, symbol, rhs) : rk4_step(y, t, dt, rhs);
            return y.field;
        };
        std::vector<SpectralField> sols;
        for (double dt : {4e-3, 2e-3, 1e-3, 5e-4}) sols.push_back(solve(dt));
        std::vector<double> errs;
        for (std::size_t i = 0; i + 1 < sols.size(); ++i) {
            SpectralField d = sols[i];
            d -= sols[i + 1];
            errs.push_back(std::sqrt(energy_l2(d)));
        }
        for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
            const double order = std::log2(errs[i] / errs[i + 1]);
            c.expect(std::abs(order - 4.0) <= 0.2,
                     viscous ? "ifrk4_order" : "rk4_order", order);
        }
    }

    // Parseval / spectrum-sum identity.
    {
        std::mt19937 rng(2024);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        GridSpec g = GridSpec::cube(32);
        PhysicalField samples(g, 3);
        for (int comp = 0; comp < 3; ++comp)
            for (auto& v : samples.component(comp)) v = dist(rng);
        SpectralField f = to_spectral(samples);
        for (int comp = 0; comp < 3; ++comp) f.at(comp, 0, 0, 0) = {};
        const PhysicalField phys = to_physical(f);
        double direct = 0.0;
        for (int comp = 0; comp < 3; ++comp)
            for (double v : phys.component(comp)) direct += v * v;
        direct *= g.cell_volume();
        double shell_sum = 0.0;
        for (double v : spectrum(f)) shell_sum += v;
        const double parseval = std::abs(energy_l2(f) - direct) / direct;
        const double regroup = std::abs(shell_sum - energy_l2(f)) / energy_l2(f);
        c.expect(parseval < 1e-13, "parseval_rel", parseval);
        c.expect(regroup < 1e-13, "spectrum_sum_rel", regroup);
    }

    // Idempotence at machine precision.
    {
        std::mt19937 rng(7);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        GridSpec g = GridSpec::cube(32);
        PhysicalField samples(g, 3);
        for (int comp = 0; comp < 3; ++comp)
            for (auto& v : samples.component(comp)) v = dist(rng);
        SpectralField f = to_spectral(samples);
        SpectralField d1 = dealias(f);
        SpectralField d2 = dealias(d1);
        double dealias_diff = 0.0;
        SpectralField p1 = leray_project(f);
        SpectralField p2 = leray_project(p1);
        double leray_diff = 0.0, scale = 0.0;
        for (int comp = 0; comp < 3; ++comp) {
            auto a1 = d1.component(comp), a2 = d2.component(comp);
            auto b1 = p1.component(comp), b2 = p2.component(comp);
            for (std::size_t i = 0; i < a1.size(); ++i) {
                dealias_diff = std::max(dealias_diff, std::abs(a1[i] - a2[i]));
                leray_diff = std::max(leray_diff, std::abs(b1[i] - b2[i]));
                scale = std::max(scale, std::abs(b1[i]));
            }
        }
        c.expect(dealias_diff == 0.0, "dealias_idempotent", dealias_diff);
        c.expect(leray_diff <= 1e-14 * scale, "leray_idempotent", leray_diff / scale);
    }

    // Spectrum tail at the dealiasing cutoff for the resolved 3D run.
    {
        GridSpec g = GridSpec::cube(64);
        VoigtParams p{4.0 / 64.0, 0.0, VoigtParams::Model::EulerVoigt3D};
        StepperConfig s;
        s.t_end = 1.0;
        s.sample_interval = 0.5;
        const IntegrationResult r = integrate(taylor_green(g), p, s);
        const auto shells = spectrum(r.final_state);
        double peak = 0.0;
        for (double v : shells) peak = std::max(peak, v);
        const double tail = shells.at(g.dealias_cutoff(0) - 1) / peak;
        c.expect(tail < 1e-12, "cutoff_shell_over_peak", tail);
    }
    return c.ok;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(Check&)> run;
};

const Criterion kCriteria[] = {
    {1, "BBM inviscid blow-up detection (earliest_T = 1.138 +- 0.02)", criterion_1},
    {2, "BBM viscous true-negative (min_slope = -0.235 +- 0.05)", criterion_2},
    {3, "S_min(nu) crossing of -1 at nu* = 2.3e-4 within a factor of 2", criterion_3},
    {4, "1D conservation: eps_rel < 1e-12 inviscid, < 1e-11 viscous", criterion_4},
    {5, "3D conservation at 64^3: eps_rel < 1e-9, div < 1e-10, zero mean", criterion_5},
    {6, "3D slope pipeline at 128^3: monotone Q, finite slopes, energy transfer",
     criterion_6},
    {7, "Oracle agreement: alpha-convergence to Burgers, T*(1) = 1", criterion_7},
    {8, "Numerics: order 4, Parseval 1e-13, idempotence, spectral tail", criterion_8},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[i + 1]);

    int failures = 0;
    for (const Criterion& criterion : kCriteria) {
        if (only != 0 && criterion.id != only) continue;
        Check check;
        bool ok = false;
        try {
            ok = criterion.run(check);
        } catch (const std::exception& e) {
            check.detail << " exception: " << e.what();
        }
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion.id << ": "
                  << criterion.name << " -- " << check.detail.str() << std::endl;
        if (!ok) ++failures;
    }
    return failures;
}
