#include "voigt/sweep.hpp"

#include "voigt/timestep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace voigt {

int worker_count() {
    if (const char* env = std::getenv("VOIGT_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string series_filename(std::size_t alpha_index, std::size_t nu_index) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "series_a%02zu_nu%02zu.csv", alpha_index, nu_index);
    return buf;
}

namespace {

std::string spectrum_filename(std::size_t ai, std::size_t ni, std::int64_t sample) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "spectrum_a%02zu_nu%02zu_s%04lld.csv", ai, ni,
                  static_cast<long long>(sample));
    return buf;
}

std::string checkpoint_filename(std::size_t ai, std::size_t ni, std::int64_t sample) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "ckpt_a%02zu_nu%02zu_s%04lld.bin", ai, ni,
                  static_cast<long long>(sample));
    return buf;
}

SpectralField initial_field(const RunConfig& cfg) {
    return cfg.model == VoigtParams::Model::BBM1D ? bbm_initial(cfg.grid())
                                                  : taylor_green(cfg.grid());
}

DiagnosticSeries run_job(const RunConfig& cfg, std::size_t ai, std::size_t ni) {
    const double alpha = cfg.alphas[ai];
    const double nu = cfg.nus[ni];
    const VoigtParams params = cfg.params(alpha, nu);
    const StepperConfig stepper = cfg.stepper(nu);
    const SpectralField u0 = initial_field(cfg);

    std::int64_t sample = 0;
    SampleCallback sink = [&](const DiagnosticRecord&, const SpectralField& field) {
        if (cfg.spectrum_cadence > 0 && sample % cfg.spectrum_cadence == 0)
            write_spectrum_csv(cfg.output_dir / spectrum_filename(ai, ni, sample),
                               spectrum(field));
        if (cfg.checkpoint_cadence > 0 && sample % cfg.checkpoint_cadence == 0)
            write_checkpoint(cfg.output_dir / checkpoint_filename(ai, ni, sample),
                             {field, cfg.model, alpha, nu,
                              static_cast<double>(sample) * cfg.sample_interval});
        ++sample;
    };

    IntegrationResult result = integrate(u0, params, stepper, sink);
    write_diagnostics_csv(cfg.output_dir / series_filename(ai, ni), result.series);
    return std::move(result.series);
}

void write_manifest(const RunConfig& cfg) {
    auto path = cfg.output_dir / "runs.csv";
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << "alpha_index,nu_index,alpha,nu,series_path\n";
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai)
        for (std::size_t ni = 0; ni < cfg.nus.size(); ++ni)
            out << ai << ',' << ni << ',' << format_double(cfg.alphas[ai]) << ','
                << format_double(cfg.nus[ni]) << ',' << series_filename(ai, ni) << '\n';
}

std::string nu_suffix(std::size_t ni) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "nu%02zu", ni);
    return buf;
}

// Slope tables, verdicts, and S_min from the collected series; shared by
// run_sweep and analyze.
void analyze_series(const RunConfig& cfg, SweepResult& result) {
    const std::size_t na = cfg.alphas.size();
    const std::size_t nn = cfg.nus.size();

    // Q rows want alphas ascending; map sorted order back to list indices.
    std::vector<std::size_t> order(na);
    for (std::size_t i = 0; i < na; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return cfg.alphas[a] < cfg.alphas[b]; });

    result.tables.assign(nn, std::nullopt);
    result.verdicts.assign(nn, std::nullopt);
    std::vector<std::pair<double, Verdict>> verdict_rows;
    for (std::size_t ni = 0; ni < nn; ++ni) {
        SlopeTable table;
        table.t_grid = cfg.horizons;
        for (std::size_t i : order) {
            table.alphas.push_back(cfg.alphas[i]);
            table.q.push_back(running_sup(result.series[i][ni], cfg.horizons));
        }
        if (na < 2) {
            if (ni == 0)
                result.notes.push_back(
                    "single alpha: slopes need at least two alpha values; "
                    "slope tables are left empty and no verdict is issued");
            write_slope_csv(cfg.output_dir / ("slopes_" + nu_suffix(ni) + ".csv"), table);
            result.tables[ni] = std::move(table);
            continue;
        }
        table = loglog_slopes(std::move(table));
        write_slope_csv(cfg.output_dir / ("slopes_" + nu_suffix(ni) + ".csv"), table);
        const Verdict v = make_verdict(table);
        verdict_rows.emplace_back(cfg.nus[ni], v);
        result.verdicts[ni] = v;
        result.tables[ni] = std::move(table);
    }
    if (!verdict_rows.empty())
        write_verdict_csv(cfg.output_dir / "verdicts.csv", verdict_rows);

    if (na >= 2 && nn >= 2) {
        const std::size_t lo = order[0], hi = order[1];
        std::vector<DiagnosticSeries> lo_runs, hi_runs;
        for (std::size_t ni = 0; ni < nn; ++ni) {
            lo_runs.push_back(result.series[lo][ni]);
            hi_runs.push_back(result.series[hi][ni]);
        }
        result.smin = s_min_of_nu(cfg.nus, lo_runs, hi_runs, cfg.alphas[lo], cfg.alphas[hi],
                                  cfg.horizons, cfg.smin_mode);
        write_smin_csv(cfg.output_dir / "smin.csv", *result.smin);
    }
}

}  // namespace

SweepResult run_sweep(const RunConfig& cfg, int workers) {
    cfg.validate();
    std::filesystem::create_directories(cfg.output_dir);
    if (workers <= 0) workers = worker_count();

    const std::size_t na = cfg.alphas.size();
    const std::size_t nn = cfg.nus.size();
    SweepResult result;
    result.series.assign(na, std::vector<DiagnosticSeries>(nn));

    struct Job {
        std::size_t ai, ni;
    };
    std::vector<Job> jobs;
    for (std::size_t ai = 0; ai < na; ++ai)
        for (std::size_t ni = 0; ni < nn; ++ni) jobs.push_back({ai, ni});

    std::atomic<std::size_t> next{0};
    std::mutex fail_mutex;
    std::string failure;
    auto work = [&] {
        while (true) {
            const std::size_t j = next.fetch_add(1);
            if (j >= jobs.size()) return;
            const auto [ai, ni] = jobs[j];
            try {
                result.series[ai][ni] = run_job(cfg, ai, ni);
            } catch (const std::exception& e) {
                std::scoped_lock lock(fail_mutex);
                std::ostringstream msg;
                msg << "run (alpha=" << format_double(cfg.alphas[ai])
                    << ", nu=" << format_double(cfg.nus[ni]) << ") failed: " << e.what();
                if (failure.empty()) failure = msg.str();
            }
        }
    };

    const int nthreads = std::min<std::size_t>(workers, jobs.size());
    std::vector<std::thread> pool;
    for (int i = 1; i < nthreads; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    if (!failure.empty()) throw std::runtime_error(failure);

    write_manifest(cfg);
    analyze_series(cfg, result);
    return result;
}

SweepResult analyze(const RunConfig& cfg) {
    cfg.validate();
    SweepResult result;
    result.series.assign(cfg.alphas.size(), std::vector<DiagnosticSeries>(cfg.nus.size()));
    for (std::size_t ai = 0; ai < cfg.alphas.size(); ++ai)
        for (std::size_t ni = 0; ni < cfg.nus.size(); ++ni)
            result.series[ai][ni] =
                read_diagnostics_csv(cfg.output_dir / series_filename(ai, ni));
    analyze_series(cfg, result);
    return result;
}

DiagnosticSeries run_single(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.alphas.size() != 1 || cfg.nus.size() != 1)
        throw std::invalid_argument("run: expected exactly one alpha and one nu");
    std::filesystem::create_directories(cfg.output_dir);
    return run_job(cfg, 0, 0);
}

}  // namespace voigt
