#pragma once

#include "voigt/spectral_field.hpp"

namespace voigt {

/// Inverse transform: coefficients -> gridpoint samples. Input is untouched.
PhysicalField to_physical(const SpectralField& f);

/// Forward transform: samples -> Fourier-series coefficients (forward DFT
/// scaled by 1/point_count). Round-trips to_physical to machine precision.
SpectralField to_spectral(const PhysicalField& samples);

/// Raw-sample overload; throws std::invalid_argument on a size mismatch
/// between samples and grid.
SpectralField to_spectral(std::span<const double> samples, const GridSpec& grid,
                          int components = 1);

namespace detail {
// Single-component transforms into caller-owned storage; used by hot paths
// that recycle buffers. Same normalization as to_physical/to_spectral.
void backward_component(const GridSpec& grid, const std::complex<double>* in, double* out);
void forward_component(const GridSpec& grid, const double* in, std::complex<double>* out);
}  // namespace detail

}  // namespace voigt
