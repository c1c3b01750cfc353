#pragma once

#include "voigt/blowup.hpp"
#include "voigt/models.hpp"
#include "voigt/timestep.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace voigt {

/// Batch-run description: model, grid, parameter lists, stepping, horizons,
/// and output layout. Built from `key = value` config text and/or CLI flag
/// overrides.
struct RunConfig {
    VoigtParams::Model model = VoigtParams::Model::BBM1D;
    int n = 0;
    std::vector<double> alphas;
    std::vector<double> nus{0.0};
    double cfl = 0.5;
    double t_end = 0.0;
    double sample_interval = 0.0;
    std::vector<double> horizons;  // defaulted per model when absent
    std::filesystem::path output_dir = ".";
    int checkpoint_cadence = 0;  // write a checkpoint every k-th sample, 0 = off
    int spectrum_cadence = 0;    // write a spectrum table every k-th sample, 0 = off
    SminMode smin_mode = SminMode::LogLog;

    GridSpec grid() const;
    VoigtParams params(double alpha, double nu) const;
    StepperConfig stepper(double nu) const;  // IFRK4 when nu > 0 (BBM)
    void validate() const;
};

/// Parse line-oriented `key = value` text: `#` comments, comma-separated
/// lists, `start:step:stop` ranges for horizons, and exact rationals like
/// `12/1024`. Unknown keys, missing required keys, and invariant violations
/// throw std::invalid_argument naming the offender.
RunConfig parse_config(std::string_view text);

/// Two-stage variant for flag overrides: collect pairs from text, overlay
/// more pairs, then build.
std::map<std::string, std::string, std::less<>> config_pairs(std::string_view text);
RunConfig build_config(const std::map<std::string, std::string, std::less<>>& pairs);

/// `p/q` exact rational or plain floating literal.
double parse_number(std::string_view token);
std::vector<double> parse_number_list(std::string_view text);

/// Comma list or inclusive `start:step:stop` range.
std::vector<double> parse_number_grid(std::string_view text);

}  // namespace voigt
