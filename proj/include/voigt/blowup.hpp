#pragma once

#include "voigt/diagnostics.hpp"

#include <optional>
#include <span>
#include <vector>

namespace voigt {

/// Q(alpha, T) supremum table with pairwise log-log slopes in alpha.
/// q[i][j] = max over [0, T_j] of ||grad u^{alpha_i}||_L2; slopes[i][j] is the
/// ln-ln finite difference between alphas i and i+1 at horizon T_j;
/// p_estimate[j] is the slope of the smallest-alpha adjacent pair.
struct SlopeTable {
    std::vector<double> alphas;  // strictly increasing, all > 0
    std::vector<double> t_grid;
    std::vector<std::vector<double>> q;
    std::vector<std::vector<double>> slopes;
    std::vector<double> p_estimate;
};

/// Criterion outcome: blow-up is indicated when the scaling exponent estimate
/// reaches the critical value -1 at some horizon.
struct Verdict {
    bool blow_up_indicated = false;
    std::optional<double> earliest_t;  // first horizon with p_estimate <= threshold
    double min_slope = 0.0;            // minimum p_estimate over horizons
};

/// Q row for one run: max of the gradient norm over all recorded steps with
/// t <= T_j (per-step running supremum when available, recorded samples
/// otherwise). Throws when t_grid exceeds the series range.
std::vector<double> running_sup(const DiagnosticSeries& series, std::span<const double> t_grid);

/// Fill slopes and p_estimate from alphas/t_grid/q. Requires >= 2 alphas and
/// strictly positive Q entries.
SlopeTable loglog_slopes(SlopeTable table);

/// Least-squares scaling exponent over the k smallest alphas per horizon
/// (k = 2 reproduces the adjacent-pair estimate). For extrapolation studies.
std::vector<double> p_estimate_least_squares(const SlopeTable& table, int k);

/// Scan horizons in increasing order; report the first T with
/// p_estimate <= threshold and the global minimum.
Verdict make_verdict(const SlopeTable& table, double threshold = -1.0);

enum class SminMode { LogLog, Literal };

/// S_min for one viscosity from the two runs at alpha_lo < alpha_hi.
/// LogLog: min over the horizon grid of the pairwise log-log slope of
/// Q(alpha, T) (the figure semantics; comparable to the critical value -1).
/// Literal: the quoted raw difference quotient
///   min_{0 < t <= T} (||u^a2_x(t)|| - ||u^a1_x(t)||) / (a2 - a1)
/// over the shared sample grid. Throws on mismatched time grids or a
/// degenerate alpha pair.
double s_min(const DiagnosticSeries& lo, const DiagnosticSeries& hi, double alpha_lo,
             double alpha_hi, std::span<const double> horizons, SminMode mode);

struct SminTable {
    std::vector<double> nus;
    std::vector<double> s_min;
    SminMode mode = SminMode::LogLog;
};

/// S_min(nu) over a sorted viscosity list; lo_runs/hi_runs are the series at
/// alpha_lo/alpha_hi for each nu, in the same order.
SminTable s_min_of_nu(std::span<const double> nus, std::span<const DiagnosticSeries> lo_runs,
                      std::span<const DiagnosticSeries> hi_runs, double alpha_lo, double alpha_hi,
                      std::span<const double> horizons, SminMode mode = SminMode::LogLog);

}  // namespace voigt
