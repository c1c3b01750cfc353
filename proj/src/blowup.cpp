#include "voigt/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace voigt {

namespace {

constexpr double kTimeTol = 1e-9;

}  // namespace

std::vector<double> running_sup(const DiagnosticSeries& series, std::span<const double> t_grid) {
    if (series.size() == 0) throw std::invalid_argument("running_sup: empty series");
    // Cumulative max of the best per-sample information: the per-step running
    // supremum when the series carries one, raw samples otherwise.
    std::vector<double> cummax(series.size());
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double v = std::max(series.grad_norm[i], series.running_sup_grad[i]);
        best = std::max(best, v);
        cummax[i] = best;
    }
    std::vector<double> q;
    q.reserve(t_grid.size());
    for (double T : t_grid) {
        if (T < series.times.front() - kTimeTol || T > series.times.back() + kTimeTol)
            throw std::invalid_argument("running_sup: horizon outside the recorded range");
        // Last sample with time <= T.
        auto it = std::upper_bound(series.times.begin(), series.times.end(), T + kTimeTol);
        const std::size_t idx = static_cast<std::size_t>(it - series.times.begin()) - 1;
        q.push_back(cummax[idx]);
    }
    return q;
}

SlopeTable loglog_slopes(SlopeTable table) {
    const std::size_t na = table.alphas.size();
    const std::size_t nt = table.t_grid.size();
    if (na < 2) throw std::invalid_argument("loglog_slopes: need at least two alphas");
    for (std::size_t i = 0; i + 1 < na; ++i)
        if (!(table.alphas[i] < table.alphas[i + 1]) || !(table.alphas[i] > 0.0))
            throw std::invalid_argument("loglog_slopes: alphas must be positive and increasing");
    if (table.q.size() != na)
        throw std::invalid_argument("loglog_slopes: Q row count does not match alphas");
    for (const auto& row : table.q) {
        if (row.size() != nt)
            throw std::invalid_argument("loglog_slopes: Q column count does not match horizons");
        for (double v : row)
            if (!(v > 0.0))
                throw std::invalid_argument("loglog_slopes: Q entries must be positive");
    }

    table.slopes.assign(na - 1, std::vector<double>(nt));
    for (std::size_t i = 0; i + 1 < na; ++i) {
        const double dln_alpha = std::log(table.alphas[i + 1]) - std::log(table.alphas[i]);
        for (std::size_t j = 0; j < nt; ++j)
            table.slopes[i][j] =
                (std::log(table.q[i + 1][j]) - std::log(table.q[i][j])) / dln_alpha;
    }
    table.p_estimate = table.slopes.front();
    return table;
}

std::vector<double> p_estimate_least_squares(const SlopeTable& table, int k) {
    const int na = static_cast<int>(table.alphas.size());
    if (k < 2 || k > na)
        throw std::invalid_argument("p_estimate_least_squares: k must lie in [2, #alphas]");
    std::vector<double> out(table.t_grid.size());
    for (std::size_t j = 0; j < table.t_grid.size(); ++j) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (int i = 0; i < k; ++i) {
            const double x = std::log(table.alphas[i]);
            const double y = std::log(table.q[i][j]);
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        out[j] = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    }
    return out;
}

Verdict make_verdict(const SlopeTable& table, double threshold) {
    if (table.p_estimate.empty())
        throw std::invalid_argument("make_verdict: slopes not filled");
    Verdict v;
    v.min_slope = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < table.t_grid.size(); ++j) {
        const double p = table.p_estimate[j];
        v.min_slope = std::min(v.min_slope, p);
        if (!v.earliest_t && p <= threshold) v.earliest_t = table.t_grid[j];
    }
    v.blow_up_indicated = v.earliest_t.has_value();
    return v;
}

double s_min(const DiagnosticSeries& lo, const DiagnosticSeries& hi, double alpha_lo,
             double alpha_hi, std::span<const double> horizons, SminMode mode) {
    if (!(alpha_hi > alpha_lo))
        throw std::invalid_argument("s_min: need alpha_lo < alpha_hi (degenerate denominator)");
    if (lo.size() != hi.size())
        throw std::invalid_argument("s_min: mismatched time grids");
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (std::abs(lo.times[i] - hi.times[i]) > kTimeTol)
            throw std::invalid_argument("s_min: mismatched time grids");

    if (mode == SminMode::LogLog) {
        const auto qlo = running_sup(lo, horizons);
        const auto qhi = running_sup(hi, horizons);
        const double dln_alpha = std::log(alpha_hi) - std::log(alpha_lo);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < horizons.size(); ++j) {
            if (!(qlo[j] > 0.0) || !(qhi[j] > 0.0))
                throw std::invalid_argument("s_min: Q entries must be positive");
            best = std::min(best, (std::log(qhi[j]) - std::log(qlo[j])) / dln_alpha);
        }
        return best;
    }

    const double t_max = horizons.empty() ? lo.times.back() : horizons.back();
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (lo.times[i] <= kTimeTol || lo.times[i] > t_max + kTimeTol) continue;
        best = std::min(best, (hi.grad_norm[i] - lo.grad_norm[i]) / (alpha_hi - alpha_lo));
    }
    return best;
}

SminTable s_min_of_nu(std::span<const double> nus, std::span<const DiagnosticSeries> lo_runs,
                      std::span<const DiagnosticSeries> hi_runs, double alpha_lo, double alpha_hi,
                      std::span<const double> horizons, SminMode mode) {
    if (nus.size() != lo_runs.size() || nus.size() != hi_runs.size())
        throw std::invalid_argument("s_min_of_nu: run count does not match nu list");
    if (!std::is_sorted(nus.begin(), nus.end()))
        throw std::invalid_argument("s_min_of_nu: nu list must be sorted");
    SminTable table;
    table.mode = mode;
    table.nus.assign(nus.begin(), nus.end());
    table.s_min.reserve(nus.size());
    for (std::size_t i = 0; i < nus.size(); ++i)
        table.s_min.push_back(s_min(lo_runs[i], hi_runs[i], alpha_lo, alpha_hi, horizons, mode));
    return table;
}

}  // namespace voigt
