#pragma once

#include "voigt/run_config.hpp"
#include "voigt/tables.hpp"

#include <optional>

namespace voigt {

/// Everything a sweep (or re-analysis) produced, mirrored to disk under
/// cfg.output_dir.
struct SweepResult {
    // series[i][j] for alpha index i, nu index j.
    std::vector<std::vector<DiagnosticSeries>> series;
    // One slope table + verdict per nu (absent with a single alpha).
    std::vector<std::optional<SlopeTable>> tables;
    std::vector<std::optional<Verdict>> verdicts;
    std::optional<SminTable> smin;  // present with >= 2 alphas and >= 2 nus
    std::vector<std::string> notes;
};

/// Worker count: VOIGT_WORKERS when set, available parallelism otherwise.
int worker_count();

/// Series file name for the (alpha, nu) list indices.
std::string series_filename(std::size_t alpha_index, std::size_t nu_index);

/// One integration per (alpha, nu) pair, parallel across jobs; writes series
/// files, a run manifest, slope/verdict tables per nu, and S_min(nu) when the
/// configuration supports it. Verdicts are data: the exit is clean whatever
/// they say. An integration hitting non-finite values fails the sweep with
/// the offending (alpha, nu, t).
SweepResult run_sweep(const RunConfig& cfg, int workers = 0);

/// Recompute all tables/verdicts from series files written by a previous
/// sweep with the same configuration.
SweepResult analyze(const RunConfig& cfg);

/// Single integration (requires exactly one alpha and one nu in cfg).
DiagnosticSeries run_single(const RunConfig& cfg);

}  // namespace voigt
