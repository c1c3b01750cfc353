#pragma once

#include "voigt/blowup.hpp"
#include "voigt/diagnostics.hpp"
#include "voigt/models.hpp"

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace voigt {

/// Shortest exact decimal form (17 significant digits).
std::string format_double(double v);

// Plain-text comma-separated tables, one header row each. All floating-point
// values round-trip exactly.

void write_diagnostics_csv(const std::filesystem::path& path, const DiagnosticSeries& series);
DiagnosticSeries read_diagnostics_csv(const std::filesystem::path& path);

/// Rows `kappa,E_kappa` for shells kappa = 1..size.
void write_spectrum_csv(const std::filesystem::path& path, const std::vector<double>& shells);

/// Rows `T,alpha_lo,alpha_hi,slope,p_estimate`; the p_estimate column is
/// filled on the smallest-pair rows and empty elsewhere. A table without
/// slopes produces a header-only file.
void write_slope_csv(const std::filesystem::path& path, const SlopeTable& table);

/// Rows `nu,blow_up_indicated,earliest_T,min_slope` (earliest_T empty when
/// absent).
void write_verdict_csv(const std::filesystem::path& path,
                       const std::vector<std::pair<double, Verdict>>& verdicts);

void write_smin_csv(const std::filesystem::path& path, const SminTable& table);

/// Checkpoint: text header (model, n, length, alpha, nu, t, components)
/// terminated by a `data` line, then raw little-endian 64-bit coefficients,
/// interleaved re/im, component-major, stored-lattice lexicographic order.
struct Checkpoint {
    SpectralField field;
    VoigtParams::Model model = VoigtParams::Model::BBM1D;
    double alpha = 0.0;
    double nu = 0.0;
    double t = 0.0;
};

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint read_checkpoint(const std::filesystem::path& path);

}  // namespace voigt
